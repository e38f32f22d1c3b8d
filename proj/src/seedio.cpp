#include "torclus/seedio.hpp"

#include <json.hpp>

namespace torclus {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, "seed file: " + what); }

QuotientContext quotient_from(const json& q) {
    if (q.is_string()) return parse_quotient(q.get<std::string>());
    if (!q.is_array()) bad("quotient must be a string or a list of monomials");
    std::vector<ParamMonomial> rels;
    for (const auto& r : q) {
        if (!r.is_string()) bad("quotient relations must be strings");
        rels.push_back(parse_param_monomial(r.get<std::string>()));
    }
    return QuotientContext::custom(rels);
}

json quotient_to(const QuotientContext& q) {
    switch (q.kind()) {
        case QuotientContext::Kind::None: return "none";
        case QuotientContext::Kind::Standard: return "standard";
        case QuotientContext::Kind::Custom: break;
    }
    json out = json::array();
    for (const auto& r : q.relations()) out.push_back(r.str());
    return out;
}

}  // namespace

QuotientContext parse_quotient(const std::string& text) {
    if (text == "none") return QuotientContext::none();
    if (text == "standard") return QuotientContext::standard();
    throw Error(ErrorKind::ParseError, "unknown quotient '" + text + "'");
}

ToroidalSeed seed_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        bad(e.what());
    }
    try {
        const QuotientContext q = doc.contains("quotient") ? quotient_from(doc["quotient"]) : QuotientContext::none();
        const json& be = doc.at("backend");
        const std::string kind = be.at("kind").get<std::string>();
        const int m = doc.at("exchangeable").get<int>();
        const auto exprs = doc.at("variables").get<std::vector<std::string>>();
        const auto B = doc.at("B").get<IntMatrix>();
        BackendPtr b;
        if (kind == "finite") {
            if (doc.contains("project")) bad("project applies to Cartan backends only");
            b = make_finite_backend(static_cast<int>(exprs.size()), be.at("params").get<std::vector<int64_t>>(),
                                    be.at("lambdas").get<std::vector<IntMatrix>>(), q);
        } else if (kind == "cartan") {
            std::optional<std::vector<int64_t>> keep;
            if (doc.contains("project")) keep = doc["project"].get<std::vector<int64_t>>();
            b = make_cartan_backend(make_cartan(doc.at("type").get<std::string>()), q, keep);
        } else {
            bad("unknown backend kind '" + kind + "'");
        }
        std::vector<TorusElement> vars;
        for (const auto& e : exprs) vars.push_back(parse_element(b, e));
        if (B.size() != vars.size()) bad("B needs one row per variable");
        if (m < 0 || m > static_cast<int>(vars.size())) bad("exchangeable count out of range");
        for (const auto& row : B)
            if (static_cast<int>(row.size()) != m) bad("B rows need one entry per exchangeable variable");
        return make_seed(b, std::move(vars), B, m);
    } catch (const json::exception& e) {
        bad(e.what());
    }
}

// Fixed key order; one matrix row per line.
std::string seed_to_json(const ToroidalSeed& seed) {
    auto rows = [](const IntMatrix& M, const std::string& indent) {
        if (M.empty()) return std::string("[]");
        std::string out = "[\n";
        for (size_t i = 0; i < M.size(); ++i) out += indent + "  " + json(M[i]).dump() + (i + 1 < M.size() ? ",\n" : "\n");
        return out + indent + "]";
    };
    const TorusBackend& b = *seed.backend;
    std::string out = "{\n";
    if (const auto* fb = dynamic_cast<const FiniteBackend*>(&b)) {
        out += "  \"type\": \"finite\",\n";
        out += "  \"backend\": {\n    \"kind\": \"finite\",\n    \"params\": " + json(fb->params()).dump() + ",\n    \"lambdas\": [\n";
        for (size_t k = 0; k < fb->lambdas().size(); ++k)
            out += "      " + rows(fb->lambdas()[k], "      ") + (k + 1 < fb->lambdas().size() ? ",\n" : "\n");
        out += "    ]\n  },\n";
    } else if (const auto* cb = dynamic_cast<const CartanBackend*>(&b)) {
        out += "  \"type\": " + json(cb->cartan().label()).dump() + ",\n";
        out += "  \"backend\": {\"kind\": \"cartan\"},\n";
        if (cb->keep()) out += "  \"project\": " + json(*cb->keep()).dump() + ",\n";
    }
    out += "  \"quotient\": " + quotient_to(b.quotient()).dump() + ",\n";
    out += "  \"variables\": [\n";
    for (size_t i = 0; i < seed.vars.size(); ++i) out += "    " + json(seed.vars[i].str()).dump() + (i + 1 < seed.vars.size() ? ",\n" : "\n");
    out += "  ],\n";
    out += "  \"B\": " + rows(seed.B, "  ") + ",\n";
    out += "  \"exchangeable\": " + std::to_string(seed.m) + "\n}\n";
    return out;
}

}  // namespace torclus
