#include "mtcodes/json_io.hpp"

#include <json.hpp>

namespace mtcodes {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(errc::parse_error, "malformed JSON");
    return j;
}

const json& field(const json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) raise(errc::parse_error, std::string("missing field \"") + name + '"');
    return *it;
}

std::uint32_t get_u32(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_unsigned() && !v.is_number_integer())
        raise(errc::parse_error, std::string("\"") + name + "\" must be an integer");
    const std::int64_t raw = v.get<std::int64_t>();
    if (raw < 0 || raw > UINT32_MAX)
        raise(errc::parse_error, std::string("\"") + name + "\" out of range");
    return static_cast<std::uint32_t>(raw);
}

std::vector<std::int64_t> get_int_array(const json& v, const char* name) {
    if (!v.is_array()) raise(errc::parse_error, std::string("\"") + name + "\" must be an array");
    std::vector<std::int64_t> out;
    for (const auto& e : v) {
        if (!e.is_number_integer() && !e.is_number_unsigned())
            raise(errc::parse_error, std::string("\"") + name + "\" must hold integers");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

Poly get_poly(const json& j, const char* name, const PrimeField& f) {
    return Poly::from_coeffs(f, get_int_array(field(j, name), name));
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (auto c : p.coeffs()) arr.push_back(c);
    return arr;
}

FieldElement get_constant(const json& j, const char* name, const PrimeField& f) {
    const json& v = field(j, name);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        raise(errc::parse_error, std::string("\"") + name + "\" must be an integer");
    return f.element(v.get<std::int64_t>());
}

Binomial get_binomial(const json& j, const char* name, const PrimeField& f) {
    const json& v = field(j, name);
    return Binomial(get_u32(v, "n"), get_constant(v, "a", f));
}

MTGenerator parse_mt_generator(const json& j, const PrimeField& f) {
    const json& blocks_json = field(j, "blocks");
    if (!blocks_json.is_array() || blocks_json.empty())
        raise(errc::parse_error, "\"blocks\" must be a nonempty array");
    std::vector<MTBlock> blocks;
    std::vector<Poly> polys;
    for (const auto& b : blocks_json) {
        blocks.emplace_back(get_u32(b, "m"), get_constant(b, "a", f));
        polys.push_back(get_poly(b, "gen", f));
    }
    return MTGenerator(std::move(blocks), std::move(polys));
}

// Derives h when a template names only g: for shared splits h is the gcd
// binomial divided by g, for the corollary it is (x^n2 - a2) / g.
GcdSplit get_split(const json& j, const PrimeField& f, const Poly& product) {
    const Poly g = get_poly(j, "g", f);
    if (j.contains("h")) {
        const Poly h = get_poly(j, "h", f);
        return {g, h};
    }
    auto [h, rem] = poly_divmod(product, g);
    if (!rem.is_zero())
        raise(errc::not_a_divisor, "\"g\" does not divide the split target; supply \"h\"");
    return {g, h};
}

ConstructionSpec parse_construction_impl(const json& j, bool allow_missing_multipliers) {
    const std::string kind = field(j, "construction").get<std::string>();
    const PrimeField f(get_u32(j, "q"));

    auto multiplier = [&](const json& holder, const char* name) -> Poly {
        if (allow_missing_multipliers) {
            if (holder.contains(name))
                raise(errc::parse_error,
                      std::string("search templates must omit \"") + name +
                          "\"; multipliers are sampled (use \"inject\" for a fixed candidate)");
            return Poly::one(f);
        }
        return get_poly(holder, name, f);
    };

    if (kind == "coprime_concat") {
        return CoprimeConcatSpec{get_binomial(j, "b1", f), get_poly(j, "g1", f),
                                 get_binomial(j, "b2", f), get_poly(j, "g2", f)};
    }
    if (kind == "degenerate" || kind == "shared_factor") {
        Binomial b1 = get_binomial(j, "b1", f);
        Binomial b2 = get_binomial(j, "b2", f);
        GcdSplit split = get_split(j, f, binomial_gcd(b1, b2));
        Poly p1 = multiplier(j, "p1");
        Poly p2 = multiplier(j, "p2");
        if (kind == "degenerate") return DegenerateSpec{b1, b2, split, p1, p2};
        return SharedFactorSpec{b1, b2, split, p1, p2};
    }
    if (kind == "subcode_sum") {
        const json& specs = field(j, "specs");
        if (!specs.is_array() || specs.empty())
            raise(errc::parse_error, "\"specs\" must be a nonempty array");
        std::vector<SubcodeSumPart> parts;
        for (const auto& s : specs) {
            Binomial b(get_u32(s, "n"), get_constant(s, "a", f));
            parts.push_back({b, get_poly(s, "g", f), multiplier(s, "p")});
        }
        return SubcodeSumSpec{std::move(parts), get_u32(j, "k")};
    }
    if (kind == "corollary") {
        Binomial b1 = get_binomial(j, "b1", f);
        Binomial b2 = get_binomial(j, "b2", f);
        GcdSplit split = get_split(j, f, b2.to_poly());
        return CorollarySpec{b1, multiplier(j, "p1"), b2, split, multiplier(j, "p2")};
    }
    if (kind == "qt") {
        const std::uint32_t m = get_u32(j, "m");
        FieldElement a = get_constant(j, "a", f);
        Poly g = get_poly(j, "g", f);
        std::vector<Poly> fs;
        if (allow_missing_multipliers) {
            if (j.contains("fs"))
                raise(errc::parse_error, "search templates must omit \"fs\"; use \"ell\"");
            fs.assign(get_u32(j, "ell"), Poly::one(f));
        } else {
            const json& fs_json = field(j, "fs");
            if (!fs_json.is_array() || fs_json.empty())
                raise(errc::parse_error, "\"fs\" must be a nonempty array");
            for (const auto& e : fs_json) fs.push_back(Poly::from_coeffs(f, get_int_array(e, "fs")));
        }
        return QtSpec{m, a, g, std::move(fs)};
    }
    raise(errc::parse_error, "unknown construction \"" + kind + '"');
}

}  // namespace

GenMatrix parse_code_spec_json(const std::string& text, std::string* description) {
    const json j = parse_text(text);
    const PrimeField f(get_u32(j, "q"));

    if (j.contains("matrix")) {
        const json& rows_json = field(j, "matrix");
        if (!rows_json.is_array() || rows_json.empty())
            raise(errc::parse_error, "\"matrix\" must be a nonempty array of rows");
        std::vector<std::vector<std::uint16_t>> rows;
        for (const auto& r : rows_json) {
            std::vector<std::uint16_t> row;
            for (std::int64_t v : get_int_array(r, "matrix"))
                row.push_back(static_cast<std::uint16_t>(f.reduce_int(v)));
            rows.push_back(std::move(row));
        }
        if (description) *description = "matrix";
        return GenMatrix::from_rows(f, rows);
    }

    if (j.contains("blocks")) {
        MTGenerator gen = parse_mt_generator(j, f);
        const json& kind = field(j, "kind");
        if (kind.is_string() && kind.get<std::string>() == "full") {
            MTCode code = make_mt_code(gen);
            if (description) *description = "mt full";
            return code.matrix();
        }
        if (kind.is_object() && kind.contains("subcode")) {
            MTCode code = mt_subcode(gen, get_u32(kind, "subcode"));
            if (description) *description = "mt subcode";
            return code.matrix();
        }
        raise(errc::parse_error, "\"kind\" must be \"full\" or {\"subcode\": k}");
    }

    if (j.contains("gen")) {
        const std::uint32_t n = get_u32(j, "n");
        FieldElement a = get_constant(j, "a", f);
        ConstacyclicCode code = ConstacyclicCode::make(n, a, get_poly(j, "gen", f));
        if (description) *description = "constacyclic";
        return code.genmatrix();
    }

    raise(errc::parse_error, "code spec needs \"matrix\", \"blocks\", or \"gen\"");
}

std::string mt_code_to_json(const MTCode& code) {
    json j;
    j["q"] = code.generator().field().p();
    if (code.kind() == MTKind::full)
        j["kind"] = "full";
    else
        j["kind"] = json{{"subcode", code.subcode_k()}};
    json blocks = json::array();
    for (std::size_t i = 0; i < code.generator().block_count(); ++i) {
        const MTBlock& b = code.generator().blocks()[i];
        blocks.push_back(json{{"m", b.m},
                              {"a", b.a.value()},
                              {"gen", poly_to_json(code.generator().polys()[i])}});
    }
    j["blocks"] = std::move(blocks);
    return j.dump(2);
}

ConstructionSpec parse_construction_json(const std::string& text) {
    return parse_construction_impl(parse_text(text), false);
}

ConstructionSpec parse_construction_template_json(const std::string& text) {
    return parse_construction_impl(parse_text(text), true);
}

std::string construction_output_json(const ConstructionReport& report) {
    json j;
    j["code"] = json::parse(mt_code_to_json(report.code));
    json rep;
    rep["predicted_n"] = report.predicted_n;
    rep["predicted_k"] = report.predicted_k;
    rep["bound_kind"] = bound_kind_name(report.bound_kind);
    rep["bound_value"] = report.bound_value;
    json constituents = json::array();
    for (const auto& c : report.constituents) {
        json entry{{"n", c.n}, {"k", c.k}, {"q", c.q}};
        if (c.d) entry["d"] = *c.d;
        constituents.push_back(std::move(entry));
    }
    rep["constituents"] = std::move(constituents);
    if (!report.weight2_witness.empty()) {
        json w = json::array();
        for (auto v : report.weight2_witness) w.push_back(v);
        rep["weight2_witness"] = std::move(w);
    }
    if (report.actual_d) rep["actual_d"] = *report.actual_d;
    j["report"] = std::move(rep);
    return j.dump(2);
}

SearchConfig parse_search_config_json(const std::string& text) {
    const json j = parse_text(text);
    ConstructionSpec spec =
        parse_construction_impl(field(j, "construction"), true);
    const PrimeField f(get_u32(field(j, "construction"), "q"));

    SearchConfig cfg{std::move(spec), {}, 1, 0, kExhaustiveDispatchLimit, 10, std::nullopt};
    for (std::int64_t v : get_int_array(field(j, "max_degrees"), "max_degrees")) {
        if (v < 0) raise(errc::parse_error, "\"max_degrees\" must be nonnegative");
        cfg.max_degrees.push_back(static_cast<std::uint32_t>(v));
    }
    cfg.num_candidates = field(j, "num_candidates").get<std::uint64_t>();
    if (j.contains("seed")) cfg.seed = field(j, "seed").get<std::uint64_t>();
    if (j.contains("distance_budget"))
        cfg.distance_budget = field(j, "distance_budget").get<std::uint64_t>();
    if (j.contains("keep_top")) cfg.keep_top = field(j, "keep_top").get<std::uint64_t>();
    if (j.contains("inject")) {
        const json& inj = field(j, "inject");
        if (!inj.is_array()) raise(errc::parse_error, "\"inject\" must be an array of arrays");
        std::vector<Poly> ms;
        for (const auto& e : inj) ms.push_back(Poly::from_coeffs(f, get_int_array(e, "inject")));
        cfg.inject = std::move(ms);
    }
    return cfg;
}

}  // namespace mtcodes
