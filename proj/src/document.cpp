#include "sds/document.hpp"

#include <json.hpp>

#include "sds/arith.hpp"

namespace sds {

using nlohmann::json;

FieldDescriptor field_descriptor(const FiniteField& F) {
    return {F.p(), F.degree(), F.modulus(), F.coords(F.generator())};
}

FiniteField field_from_descriptor(const FieldDescriptor& d) {
    if (d.w_coords.size() != static_cast<size_t>(d.n))
        throw std::invalid_argument("field descriptor: w has wrong length");
    Int w = 0;
    for (size_t i = d.w_coords.size(); i-- > 0;) {
        if (d.w_coords[i] < 0 || d.w_coords[i] >= d.p)
            throw std::invalid_argument("field descriptor: w coordinate out of range");
        w = w * d.p + d.w_coords[i];
    }
    return FiniteField(d.p, d.n, d.modulus, w);
}

std::string group_type_name(const AbelianGroup& G) {
    if (G.is_cyclic()) return "cyclic";
    const auto& orders = G.orders();
    bool uniform_prime = is_prime(orders[0]);
    for (Int d : orders) uniform_prime = uniform_prime && d == orders[0];
    return uniform_prime ? "elementary" : "product";
}

SignedSetDocument document_from_ring(GroupRingElement element,
                                     std::optional<FieldDescriptor> field,
                                     std::optional<SdsParams> declared) {
    SignedSetDocument doc;
    doc.group = element.group;
    doc.field = std::move(field);
    doc.element = std::move(element);
    doc.declared = declared;
    return doc;
}

std::string serialize_document(const SignedSetDocument& doc) {
    json j;
    j["group"]["type"] = group_type_name(doc.group);
    j["group"]["orders"] = doc.group.orders();
    if (doc.field) {
        j["group"]["field"] = {{"p", doc.field->p},
                               {"n", doc.field->n},
                               {"modulus", doc.field->modulus},
                               {"w", doc.field->w_coords}};
    }
    json pos = json::array(), neg = json::array();
    for (Int g = 0; g < doc.group.order(); ++g) {
        Int c = doc.element.coeffs[g];
        if (c == 0) continue;
        json tuple = doc.group.coords(g);
        for (Int r = 0; r < (c > 0 ? c : -c); ++r) (c > 0 ? pos : neg).push_back(tuple);
    }
    j["positive"] = std::move(pos);
    j["negative"] = std::move(neg);
    if (doc.declared) {
        j["params"] = {{"v", doc.declared->v}, {"k", doc.declared->k}, {"lambda", doc.declared->lambda}};
    }
    return j.dump(2) + "\n";
}

namespace {

std::vector<Int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be a list");
    std::vector<Int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
        out.push_back(e.get<Int>());
    }
    return out;
}

} // namespace

SignedSetDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("group")) throw ParseError("missing group descriptor");
    const json& jg = j["group"];
    if (!jg.contains("orders")) throw ParseError("group descriptor lacks orders");

    SignedSetDocument doc;
    try {
        doc.group = AbelianGroup(int_list(jg["orders"], "group.orders"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (jg.contains("type") && jg["type"].is_string()) {
        std::string declared_type = jg["type"].get<std::string>();
        if (declared_type != group_type_name(doc.group))
            throw ParseError("group type '" + declared_type + "' does not match the orders list");
    }

    if (jg.contains("field") && !jg["field"].is_null()) {
        const json& jf = jg["field"];
        FieldDescriptor fd;
        if (!jf.contains("p") || !jf.contains("n") || !jf.contains("modulus") || !jf.contains("w"))
            throw ParseError("field descriptor needs p, n, modulus, w");
        fd.p = jf["p"].get<Int>();
        fd.n = jf["n"].get<int>();
        fd.modulus = int_list(jf["modulus"], "field.modulus");
        fd.w_coords = int_list(jf["w"], "field.w");
        FiniteField F = [&] {
            try {
                return field_from_descriptor(fd);
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("invalid field descriptor: ") + e.what());
            }
        }();
        if (additive_group(F) != doc.group)
            throw ParseError("field descriptor does not match the group orders");
        doc.field = std::move(fd);
    }

    // a tuple on both sides would cancel silently; reject that up front
    auto read_side = [&](const char* key) {
        GroupRingElement side = ring_zero(doc.group);
        if (!j.contains(key)) return side;
        if (!j[key].is_array()) throw ParseError(std::string(key) + " must be a list of tuples");
        for (const auto& tuple : j[key]) {
            std::vector<Int> coords = int_list(tuple, key);
            try {
                side.coeffs[doc.group.element(coords)] += 1;
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
        return side;
    };
    GroupRingElement pos = read_side("positive");
    GroupRingElement neg = read_side("negative");
    for (Int g = 0; g < doc.group.order(); ++g)
        if (pos.coeffs[g] != 0 && neg.coeffs[g] != 0)
            throw ParseError("positive and negative supports overlap");
    doc.element = ring_zero(doc.group);
    doc.element.coeffs = pos.coeffs - neg.coeffs;

    if (j.contains("params") && !j["params"].is_null()) {
        const json& jp = j["params"];
        if (!jp.contains("v") || !jp.contains("k") || !jp.contains("lambda"))
            throw ParseError("params needs v, k, lambda");
        doc.declared = SdsParams{jp["v"].get<Int>(), jp["k"].get<Int>(), jp["lambda"].get<Int>()};
        if (doc.declared->v != doc.group.order())
            throw ParseError("declared v does not match the group order");
    }
    return doc;
}

} // namespace sds
