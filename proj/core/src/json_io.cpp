#include "lsk/json_io.hpp"

#include <string>
#include <vector>

namespace lsk {

namespace {

using nlohmann::json;

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const char* what) {
    if (!j.is_object()) throw SchemaError(std::string(what) + ": expected an object");
    for (const char* key : keys)
        if (!j.contains(key))
            throw SchemaError(std::string(what) + ": missing key \"" + key + "\"");
    if (j.size() != keys.size())
        throw SchemaError(std::string(what) + ": unexpected extra keys");
}

int truncation_from(const json& j, const char* what) {
    const json& t = j.at("truncation");
    if (!t.is_number_integer() || t.get<long long>() < 1)
        throw SchemaError(std::string(what) + ": \"truncation\" must be an integer >= 1");
    return static_cast<int>(t.get<long long>());
}

Rational coeff_from(const json& j, const char* what) {
    if (!j.is_string())
        throw SchemaError(std::string(what) + ": coefficient must be a string");
    const std::string text = j.get<std::string>();
    auto value = rational_from_string(text);
    if (!value)
        throw SchemaError(std::string(what) + ": \"" + text + "\" is not a rational");
    if (!is_canonical_rational_string(text))
        throw NonReducedCoefficient(std::string(what) + ": \"" + text +
                                    "\" is not in reduced form");
    return *value;
}

json terms_to_json(const Element& e) {
    json terms = json::array();
    for (const auto& [word, coefficient] : e.terms()) {
        json names = json::array();
        for (auto index : word) names.push_back(e.generators()->at(index).name);
        terms.push_back(json{{"word", std::move(names)}, {"coeff", to_string(coefficient)}});
    }
    return terms;
}

Element terms_from_json(const json& terms, const GenSetPtr& generators, int truncation) {
    if (!terms.is_array()) throw SchemaError("element: \"terms\" must be an array");
    Element::TermMap map;
    const Word* previous = nullptr;
    WordOrder before;
    for (const json& entry : terms) {
        require_keys(entry, {"word", "coeff"}, "term");
        const json& names = entry.at("word");
        if (!names.is_array()) throw SchemaError("term: \"word\" must be an array");
        Word word;
        word.reserve(names.size());
        for (const json& name : names) {
            if (!name.is_string()) throw SchemaError("term: generator names must be strings");
            auto index = generators->index_of(name.get<std::string>());
            if (!index)
                throw UnknownSymbol("term: unknown generator \"" +
                                    name.get<std::string>() + "\"");
            word.push_back(static_cast<std::uint8_t>(*index));
        }
        if (static_cast<int>(word.size()) > truncation)
            throw SchemaError("term: word longer than the truncation order");
        Rational coefficient = coeff_from(entry.at("coeff"), "term");
        if (coefficient == 0) throw SchemaError("term: zero coefficients are not stored");
        auto [at, inserted] = map.emplace(std::move(word), std::move(coefficient));
        if (!inserted) throw DuplicateWord("term: word appears twice");
        if (previous && !before(*previous, at->first))
            throw SchemaError("terms are not in canonical order");
        previous = &at->first;
    }
    return Element::from_terms(generators, truncation, std::move(map));
}

}  // namespace

json element_to_json(const Element& e) {
    return json{{"truncation", e.truncation()}, {"terms", terms_to_json(e)}};
}

Element element_from_json(const json& j, const GenSetPtr& generators) {
    require_keys(j, {"truncation", "terms"}, "element");
    int truncation = truncation_from(j, "element");
    return terms_from_json(j.at("terms"), generators, truncation);
}

json context_to_json(const DglContext& ctx) {
    json generators = json::array();
    json differential = json::array();
    for (std::size_t i = 0; i < ctx.generators()->size(); ++i) {
        const Generator& g = ctx.generators()->at(i);
        generators.push_back(json{{"name", g.name}, {"degree", g.degree}});
        differential.push_back(terms_to_json(ctx.differential_of(i)));
    }
    return json{{"truncation", ctx.truncation()},
                {"generators", std::move(generators)},
                {"differential", std::move(differential)}};
}

DglContext context_from_json(const json& j) {
    require_keys(j, {"truncation", "generators", "differential"}, "context");
    int truncation = truncation_from(j, "context");

    const json& gens = j.at("generators");
    if (!gens.is_array() || gens.empty())
        throw SchemaError("context: \"generators\" must be a nonempty array");
    std::vector<Generator> list;
    for (const json& entry : gens) {
        require_keys(entry, {"name", "degree"}, "generator");
        if (!entry.at("name").is_string() || !entry.at("degree").is_number_integer())
            throw SchemaError("generator: expected a string name and an integer degree");
        list.push_back({entry.at("name").get<std::string>(),
                        static_cast<int>(entry.at("degree").get<long long>())});
    }
    GenSetPtr generators = GeneratorSet::make(std::move(list));

    const json& images = j.at("differential");
    if (!images.is_array() || images.size() != generators->size())
        throw SchemaError("context: \"differential\" must list one image per generator");
    std::vector<Element> differential;
    differential.reserve(images.size());
    for (const json& image : images)
        differential.push_back(terms_from_json(image, generators, truncation));
    return DglContext(std::move(generators), truncation, std::move(differential));
}

json descriptor_to_json(const McDescriptor& descriptor) {
    return json{{"family", family_name(descriptor.family)},
                {"param", to_string(descriptor.param)},
                {"element", element_to_json(descriptor.element)},
                {"decomposable_part", element_to_json(descriptor.decomposable_part)}};
}

McDescriptor descriptor_from_json(const json& j, const LsInterval& interval) {
    require_keys(j, {"family", "param", "element", "decomposable_part"}, "descriptor");
    if (!j.at("family").is_string()) throw SchemaError("descriptor: \"family\" must be a string");
    const std::string family = j.at("family").get<std::string>();
    if (family != "I" && family != "II")
        throw SchemaError("descriptor: \"family\" must be \"I\" or \"II\"");
    Rational param = coeff_from(j.at("param"), "descriptor");

    Element element = element_from_json(j.at("element"), interval.ctx.generators());
    if (element.truncation() != interval.truncation())
        throw SchemaError("descriptor: element truncation differs from the context");
    Element decomposable =
        element_from_json(j.at("decomposable_part"), interval.ctx.generators());
    if (decomposable.truncation() != interval.truncation())
        throw SchemaError("descriptor: decomposable part truncation differs from the context");
    if (!(element - element.linear_part() == decomposable))
        throw SchemaError("descriptor: decomposable part does not match the element");

    McDescriptor classified = classify_mc(interval, element);
    if (family_name(classified.family) != family || classified.param != param)
        throw SchemaError("descriptor: family/param contradict the element");
    return classified;
}

}  // namespace lsk
