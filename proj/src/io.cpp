#include "nilbu/io.hpp"

#include <cctype>

namespace nilbu {

Json to_json(const AbelianGroup& g) {
    Json images = Json::object();
    for (std::size_t j = 0; j < g.generator_names.size(); ++j)
        images[g.generator_names[j]] = g.gen_images[j];
    return Json{{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"gen_images", images}};
}

Json to_json(const Z2Char& phi) { return Json{{"s", phi.s}, {"v", phi.v}, {"h", phi.h}}; }

Z2Char z2char_from_json(const Json& j) {
    if (!j.is_object())
        throw ParseError("character must be a JSON object");
    Z2Char phi;
    try {
        if (j.contains("s"))
            phi.s = j.at("s").get<std::vector<int>>();
        if (j.contains("v"))
            phi.v = j.at("v").get<std::vector<int>>();
        phi.h = j.at("h").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed character: ") + e.what());
    }
    return phi;
}

Json to_json(const CoveringDescriptor& d) {
    return Json{{"base", to_string(d.base)},
                {"phi", to_json(d.phi)},
                {"cover", to_string(d.cover)},
                {"index", d.index}};
}

Z2Char parse_character(std::string_view text, const NilManifold& n) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    Z2Char phi;
    if (pos < text.size() && text[pos] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid character JSON: ") + e.what());
        }
        phi = z2char_from_json(j);
    } else {
        std::size_t index = 0;
        try {
            std::size_t used = 0;
            index = std::stoul(std::string(text), &used);
            if (text.find_first_not_of(" \t", used) != std::string_view::npos)
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("character must be a JSON object or an epimorphism index, got '" +
                             std::string(text) + "'");
        }
        const auto epis = enumerate_epis(n);
        if (index >= epis.size())
            throw InvalidCharacter(to_string(n) + " has " + std::to_string(epis.size()) +
                                   " epimorphisms; index " + std::to_string(index) +
                                   " is out of range");
        phi = epis[index];
    }
    check_epimorphism(n, phi);
    return phi;
}

} // namespace nilbu
