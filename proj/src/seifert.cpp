#include "nilbu/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nilbu {

using namespace arith;

namespace {

void check_base(BaseOrientation epsilon, Int g_prime) {
    if (g_prime < 0)
        throw InvalidInvariant("g' must be non-negative");
    if (epsilon == BaseOrientation::Orientable && g_prime % 2 != 0)
        throw InvalidInvariant("g' must be even over an orientable base");
    if (epsilon == BaseOrientation::NonOrientable && g_prime < 1)
        throw InvalidInvariant("g' must be at least 1 over a non-orientable base");
}

} // namespace

SeifertInvariant::SeifertInvariant(Int b, BaseOrientation epsilon, Int g_prime,
                                   std::vector<FibrePair> pairs)
    : b_(b), epsilon_(epsilon), g_prime_(g_prime), pairs_(std::move(pairs)) {
    check_base(epsilon_, g_prime_);
    for (const auto& p : pairs_) {
        if (p.a < 2 || p.beta <= 0 || p.beta >= p.a)
            throw InvalidInvariant("fibre pair (" + std::to_string(p.a) + "," +
                                   std::to_string(p.beta) + ") is not normalized");
        if (gcd(p.a, p.beta) != 1)
            throw InvalidInvariant("fibre pair (" + std::to_string(p.a) + "," +
                                   std::to_string(p.beta) + ") is not coprime");
    }
    std::sort(pairs_.begin(), pairs_.end());
}

SeifertInvariant normalize(const LooseSeifert& raw) {
    Int b = raw.b;
    std::vector<FibrePair> pairs;
    for (const auto& p : raw.pairs) {
        if (p.a <= 0)
            throw InvalidInvariant("fibre multiplicity a must be positive, got " +
                                   std::to_string(p.a));
        if (gcd(p.a, p.beta) != 1)
            throw InvalidInvariant("fibre pair (" + std::to_string(p.a) + "," +
                                   std::to_string(p.beta) + ") is not coprime");
        b = add(b, floor_div(p.beta, p.a));
        if (p.a != 1)
            pairs.push_back({p.a, mod(p.beta, p.a)});
    }
    return {b, raw.epsilon, raw.g_prime, std::move(pairs)};
}

Rational orbifold_euler_char(const SeifertInvariant& inv) {
    // chi(S) = 2 - g' for both base orientations (g' = 2g resp. g)
    Rational chi(sub(2, inv.g_prime()));
    for (const auto& p : inv.pairs())
        chi -= Rational(1) - Rational(1, p.a);
    return chi;
}

Rational euler_number(const SeifertInvariant& inv) {
    Rational e(inv.b());
    for (const auto& p : inv.pairs())
        e += Rational(p.beta, p.a);
    return e;
}

CdInvariants cd_invariants(const SeifertInvariant& inv) {
    CdInvariants out;
    for (const auto& p : inv.pairs()) {
        out.a = lcm(out.a, p.a);
        if (p.a % 2 == 0)
            ++out.d;
    }
    const Rational c = euler_number(inv) * Rational(out.a);
    out.c = c.numerator();
    return out;
}

Int b_min(const std::vector<FibrePair>& pairs) {
    Rational sum;
    for (const auto& p : pairs)
        sum += Rational(p.beta, p.a);
    return add(neg(ceil_div(sum.numerator(), sum.denominator())), 1);
}

bool is_nil(const SeifertInvariant& inv) {
    return orbifold_euler_char(inv) == Rational(0) && euler_number(inv) != Rational(0);
}

SeifertInvariant reverse_orientation(const SeifertInvariant& inv) {
    LooseSeifert flipped;
    flipped.b = sub(neg(inv.b()), static_cast<Int>(inv.n()));
    flipped.epsilon = inv.epsilon();
    flipped.g_prime = inv.g_prime();
    for (const auto& p : inv.pairs())
        flipped.pairs.push_back({p.a, sub(p.a, p.beta)});
    return normalize(flipped);
}

// ---------------------------------------------------------------------------

std::string_view family_tag(Family f) {
    switch (f) {
    case Family::T: return "T";
    case Family::K: return "K";
    case Family::F22: return "22";
    case Family::F2222: return "2222";
    case Family::F236: return "236";
    case Family::F244: return "244";
    case Family::F333: return "333";
    }
    return "?";
}

std::optional<Family> family_from_tag(std::string_view tag) {
    for (Family f : kAllFamilies)
        if (family_tag(f) == tag)
            return f;
    return std::nullopt;
}

std::size_t family_param_count(Family f) {
    switch (f) {
    case Family::F236:
    case Family::F244: return 2;
    case Family::F333: return 3;
    default: return 0;
    }
}

std::vector<std::vector<Int>> family_options(Family f) {
    switch (f) {
    case Family::F236: return {{1, 1}, {1, 5}, {2, 1}, {2, 5}};
    case Family::F244: return {{1, 1}, {1, 3}, {3, 3}};
    case Family::F333: return {{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}};
    default: return {{}};
    }
}

namespace {

BaseOrientation family_epsilon(Family f) {
    return (f == Family::K || f == Family::F22) ? BaseOrientation::NonOrientable
                                                : BaseOrientation::Orientable;
}

Int family_g_prime(Family f) {
    switch (f) {
    case Family::T:
    case Family::K: return 2;
    case Family::F22: return 1;
    default: return 0;
    }
}

} // namespace

std::vector<FibrePair> family_pairs(Family f, const std::vector<Int>& p) {
    switch (f) {
    case Family::T:
    case Family::K: return {};
    case Family::F22: return {{2, 1}, {2, 1}};
    case Family::F2222: return {{2, 1}, {2, 1}, {2, 1}, {2, 1}};
    case Family::F236: return {{2, 1}, {3, p.at(0)}, {6, p.at(1)}};
    case Family::F244: return {{2, 1}, {4, p.at(0)}, {4, p.at(1)}};
    case Family::F333: return {{3, p.at(0)}, {3, p.at(1)}, {3, p.at(2)}};
    }
    return {};
}

NilManifold::NilManifold(Family family, Int b, std::vector<Int> params)
    : family_(family), b_(b), params_(std::move(params)) {
    if (params_.size() != family_param_count(family_))
        throw InvalidInvariant("family " + std::string(family_tag(family_)) + " takes " +
                               std::to_string(family_param_count(family_)) + " parameters");
    if (family_ == Family::F244 || family_ == Family::F333)
        std::sort(params_.begin(), params_.end());
    const auto options = family_options(family_);
    if (std::find(options.begin(), options.end(), params_) == options.end())
        throw InvalidInvariant("parameters out of range for family " +
                               std::string(family_tag(family_)));
    const Int lowest = b_min(family_pairs(family_, params_));
    if (b_ < lowest)
        throw InvalidInvariant("b = " + std::to_string(b_) + " is below b_min = " +
                               std::to_string(lowest) + " for " + to_string(*this));
}

SeifertInvariant NilManifold::expand() const {
    return {b_, family_epsilon(family_), family_g_prime(family_), family_pairs(family_, params_)};
}

NilManifold classify(const SeifertInvariant& inv) {
    if (!is_nil(inv))
        throw NotNilError(to_string(inv) + " does not have Nil geometry (chi = " +
                          orbifold_euler_char(inv).to_string() +
                          ", e = " + euler_number(inv).to_string() + ")");
    if (euler_number(inv) < Rational(0))
        throw OrientationError(to_string(inv) +
                               " has e < 0; apply reverse_orientation first");
    for (Family f : kAllFamilies) {
        if (family_epsilon(f) != inv.epsilon() || family_g_prime(f) != inv.g_prime())
            continue;
        for (const auto& option : family_options(f)) {
            auto pairs = family_pairs(f, option);
            std::sort(pairs.begin(), pairs.end());
            if (pairs == inv.pairs())
                return {f, inv.b(), option};
        }
    }
    // chi = 0 and e != 0 leave no other orientable possibility
    throw NotNilError(to_string(inv) + " matches no Nil family");
}

// ---------------------------------------------------------------------------
// Text encodings

std::string to_string(const SeifertInvariant& inv) {
    std::ostringstream os;
    os << "SF(" << inv.b() << "; " << (inv.epsilon_sign() > 0 ? "+1" : "-1") << "; "
       << inv.g_prime();
    if (!inv.pairs().empty())
        os << "; ";
    for (const auto& p : inv.pairs())
        os << '(' << p.a << ',' << p.beta << ')';
    os << ')';
    return os.str();
}

std::string to_string(const NilManifold& m) {
    std::ostringstream os;
    os << family_tag(m.family()) << '(' << m.b();
    const auto& p = m.params();
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i == 0 ? ';' : ',') << p[i];
    os << ')';
    return os.str();
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    Int integer() {
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            negative = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        Int value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            try {
                value = add(mul(value, 10), text_[pos_] - '0');
            } catch (const OverflowError&) {
                fail("integer literal too large");
            }
            ++pos_;
        }
        return negative ? neg(value) : value;
    }

    std::string word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                         std::string(text_) + "\"");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

LooseSeifert parse_loose_seifert(std::string_view text) {
    Cursor in(text);
    if (in.word() != "SF")
        in.fail("expected SF(");
    in.expect('(');
    LooseSeifert raw;
    raw.b = in.integer();
    in.expect(';');
    const Int eps = in.integer();
    if (eps != 1 && eps != -1)
        in.fail("epsilon must be +1 or -1");
    raw.epsilon = eps > 0 ? BaseOrientation::Orientable : BaseOrientation::NonOrientable;
    in.expect(';');
    raw.g_prime = in.integer();
    if (in.accept(';')) {
        while (in.accept('(')) {
            FibrePair p;
            p.a = in.integer();
            in.expect(',');
            p.beta = in.integer();
            in.expect(')');
            raw.pairs.push_back(p);
        }
    }
    in.expect(')');
    if (!in.at_end())
        in.fail("trailing characters");
    return raw;
}

NilManifold parse_family(std::string_view text) {
    Cursor in(text);
    const std::string tag = in.word();
    const auto family = family_from_tag(tag);
    if (!family)
        in.fail("unknown family tag '" + tag + "'");
    in.expect('(');
    const Int b = in.integer();
    std::vector<Int> params;
    if (in.accept(';')) {
        params.push_back(in.integer());
        while (in.accept(','))
            params.push_back(in.integer());
    }
    in.expect(')');
    if (!in.at_end())
        in.fail("trailing characters");
    return {*family, b, std::move(params)};
}

NilManifold parse_manifold(std::string_view text) {
    Cursor probe(text);
    if (probe.word() == "SF")
        return classify(normalize(parse_loose_seifert(text)));
    return parse_family(text);
}

} // namespace nilbu
