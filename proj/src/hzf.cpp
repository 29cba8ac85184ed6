#include "hopf/hzf.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hopf::hzf {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Error::Kind::Io, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) fail(Error::Kind::Io, "cannot write " + path);
    out << content;
}

namespace {

json window_entries(const HopfData& H) {
    // mult / comult / counit / antipode tables over the finite basis.
    const auto& basis = H.basis.elements();
    json mult = json::array();
    for (const auto& a : basis)
        for (const auto& b : basis) {
            LinComb v = H.mult.apply(a, b);
            if (v.is_zero()) continue;
            json out = json::object();
            for (const auto& [id, c] : v.terms()) out[id.to_string()] = c.to_string();
            mult.push_back(json::array({a.to_string(), b.to_string(), out}));
        }
    json comult = json::array();
    for (const auto& a : basis) {
        json pairs = json::array();
        for (const auto& [id, c] : H.comult.apply(a).terms())
            pairs.push_back(json::array(
                {id.parts()[0].to_string(), id.parts()[1].to_string(), c.to_string()}));
        comult.push_back(json::array({a.to_string(), json{{"pairs", pairs}}}));
    }
    json counit = json::object();
    for (const auto& a : basis) {
        Scalar c = H.counit.apply(a);
        if (!c.is_zero()) counit[a.to_string()] = c.to_string();
    }
    json j;
    j["mult"] = std::move(mult);
    j["comult"] = std::move(comult);
    j["counit"] = std::move(counit);
    if (H.has_antipode()) {
        json anti = json::array();
        for (const auto& a : basis) {
            json out = json::object();
            for (const auto& [id, c] : H.antipode->apply(a).terms())
                out[id.to_string()] = c.to_string();
            anti.push_back(json::array({a.to_string(), out}));
        }
        j["antipode"] = std::move(anti);
    }
    return j;
}

}  // namespace

std::string algebra_to_text(const HopfData& H, const std::string& rule_name) {
    json j;
    j["field"] = H.field.to_string();
    j["meta"] = json::object();
    for (const auto& [k, v] : H.meta) j["meta"][k] = v;
    j["meta"]["name"] = H.name;

    if (H.basis.is_finite()) {
        json basis = json::array();
        for (const auto& id : H.basis.elements()) basis.push_back(id.to_string());
        j["basis"] = std::move(basis);
        if (H.unit.support_size() == 1 && H.unit.terms().begin()->second.is_one()) {
            j["unit"] = H.unit.terms().begin()->first.to_string();
        } else {
            json u = json::object();
            for (const auto& [id, c] : H.unit.terms()) u[id.to_string()] = c.to_string();
            j["unit"] = std::move(u);
        }
        json tables = window_entries(H);
        for (auto& [k, v] : tables.items()) j[k] = std::move(v);
    } else {
        std::string rule = rule_name;
        if (rule.empty()) {
            auto it = H.meta.find("rule");
            if (it != H.meta.end()) rule = it->second;
        }
        if (rule.empty())
            fail(Error::Kind::Io, "rule-backed algebra " + H.name + " needs a rule name to serialize");
        long window = 0;
        switch (H.basis.kind()) {
            case BasisDesc::Kind::IntegerPowers:
            case BasisDesc::Kind::NaturalPowers: window = H.basis.rule_window(); break;
            default: window = 0; break;
        }
        j["basis"] = json{{"rule", rule}, {"window", window}};
        j["unit"] = H.unit.terms().begin()->first.to_string();
    }
    return j.dump(2) + "\n";
}

HopfPtr algebra_from_text(const std::string& text) {
    json j = json::parse(text);
    Field f = Field::parse(j.at("field").get<std::string>());

    std::map<std::string, std::string> meta;
    std::string name = "algebra";
    if (j.contains("meta"))
        for (auto& [k, v] : j["meta"].items()) {
            if (k == "name") name = v.get<std::string>();
            else meta.emplace(k, v.get<std::string>());
        }

    if (j.at("basis").is_object()) {
        std::string rule = j["basis"].at("rule").get<std::string>();
        long window = j["basis"].value("window", 0L);
        HopfPtr out;
        if (rule == "kZ") out = make_group_algebra_kZ(f, window > 0 ? window : 6);
        else if (rule == "kX") out = make_binomial_kX(f, window > 0 ? window : 8);
        else if (rule.rfind("fixture:", 0) == 0) {
            std::string ref = rule.substr(8);
            auto slash = ref.find('/');
            Fixture fx = load_fixture(slash == std::string::npos ? ref : ref.substr(0, slash));
            if (slash == std::string::npos) fail(Error::Kind::Parse, "fixture rule needs NAME/KEY");
            std::string key = ref.substr(slash + 1);
            if (fx.products.count(key)) out = fx.product(key)->hopf;
            else out = fx.algebra(key);
        } else {
            fail(Error::Kind::Parse, "unknown basis rule: " + rule);
        }
        if (out->field != f)
            fail(Error::Kind::FieldMismatch, "declared field does not match the rule's field");
        return out;
    }

    std::vector<BasisId> basis;
    for (const auto& s : j.at("basis")) basis.push_back(BasisId::parse(s.get<std::string>()));

    LinComb unit = LinComb::zero(f);
    if (j.at("unit").is_string()) {
        unit.add_term(BasisId::parse(j["unit"].get<std::string>()), Scalar::one(f));
    } else {
        for (auto& [k, v] : j["unit"].items())
            unit.add_term(BasisId::parse(k), Scalar::parse(f, v.get<std::string>()));
    }

    std::map<std::vector<BasisId>, LinComb> mult;
    for (const auto& row : j.at("mult")) {
        BasisId a = BasisId::parse(row.at(0).get<std::string>());
        BasisId b = BasisId::parse(row.at(1).get<std::string>());
        LinComb out = LinComb::zero(f);
        for (auto& [k, v] : row.at(2).items())
            out.add_term(BasisId::parse(k), Scalar::parse(f, v.get<std::string>()));
        if (!out.is_zero()) mult.emplace(std::vector<BasisId>{a, b}, std::move(out));
    }

    std::map<std::vector<BasisId>, LinComb> comult;
    for (const auto& row : j.at("comult")) {
        BasisId a = BasisId::parse(row.at(0).get<std::string>());
        LinComb out = LinComb::zero(f);
        for (const auto& pair : row.at(1).at("pairs"))
            out.add_term(BasisId::pair(BasisId::parse(pair.at(0).get<std::string>()),
                                       BasisId::parse(pair.at(1).get<std::string>())),
                         Scalar::parse(f, pair.at(2).get<std::string>()));
        comult.emplace(std::vector<BasisId>{a}, std::move(out));
    }

    std::map<std::vector<BasisId>, Scalar> counit;
    if (j.contains("counit"))
        for (auto& [k, v] : j["counit"].items())
            counit.emplace(std::vector<BasisId>{BasisId::parse(k)},
                           Scalar::parse(f, v.get<std::string>()));

    std::optional<LinMap> antipode;
    if (j.contains("antipode")) {
        std::map<std::vector<BasisId>, LinComb> anti;
        for (const auto& row : j["antipode"]) {
            BasisId a = BasisId::parse(row.at(0).get<std::string>());
            LinComb out = LinComb::zero(f);
            for (auto& [k, v] : row.at(1).items())
                out.add_term(BasisId::parse(k), Scalar::parse(f, v.get<std::string>()));
            anti.emplace(std::vector<BasisId>{a}, std::move(out));
        }
        antipode = LinMap::table(1, f, std::move(anti));
    }

    return std::make_shared<HopfData>(name, f, BasisDesc::finite(std::move(basis)),
                                      LinMap::table(2, f, std::move(mult)), std::move(unit),
                                      LinMap::table(1, f, std::move(comult)),
                                      ScalarMap::table(1, f, std::move(counit)), std::move(antipode),
                                      std::move(meta));
}

HopfPtr load_algebra(const std::string& path) { return algebra_from_text(read_file(path)); }

void save_algebra(const std::string& path, const HopfData& H, const std::string& rule_name) {
    write_file(path, algebra_to_text(H, rule_name));
}

std::string form_to_text(const BilinearForm& form) {
    json j;
    j["left"] = form.left()->name;
    j["right"] = form.right()->name;
    j["default"] = "zero";
    json entries = json::array();
    for (const auto& a : form.left()->basis.window())
        for (const auto& b : form.right()->basis.window()) {
            Scalar v = form(a, b);
            if (!v.is_zero())
                entries.push_back(json::array({a.to_string(), b.to_string(), v.to_string()}));
        }
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

BilinearForm form_from_text(const std::string& text, HopfPtr left, HopfPtr right) {
    json j = json::parse(text);
    Field f = left->field;
    std::string def = j.value("default", std::string("zero"));
    std::map<std::vector<BasisId>, Scalar> entries;
    if (j.contains("entries"))
        for (const auto& row : j["entries"])
            entries.emplace(std::vector<BasisId>{BasisId::parse(row.at(0).get<std::string>()),
                                                 BasisId::parse(row.at(1).get<std::string>())},
                            Scalar::parse(f, row.at(2).get<std::string>()));
    if (j.contains("rule")) {
        std::string rule = j["rule"].get<std::string>();
        if (rule.rfind("fixture:", 0) == 0) {
            std::string ref = rule.substr(8);
            auto slash = ref.find('/');
            if (slash == std::string::npos) fail(Error::Kind::Parse, "fixture rule needs NAME/KEY");
            Fixture fx = load_fixture(ref.substr(0, slash));
            return fx.form(ref.substr(slash + 1));
        }
        fail(Error::Kind::Parse, "unknown form rule: " + rule);
    }
    std::string name = j.value("name", std::string("form"));
    return BilinearForm::from_table(name, left, right, std::move(entries),
                                    def == "counit-product" ? BilinearForm::Default::CounitProduct
                                                            : BilinearForm::Default::Zero);
}

BilinearForm load_form(const std::string& path, HopfPtr left, HopfPtr right) {
    return form_from_text(read_file(path), left, right);
}

void save_form(const std::string& path, const BilinearForm& form) {
    write_file(path, form_to_text(form));
}

namespace {

json map2_to_json(const LinMap& m, const std::vector<BasisId>& wl, const std::vector<BasisId>& wr) {
    json rows = json::array();
    for (const auto& a : wl)
        for (const auto& b : wr) {
            LinComb v = m.apply(a, b);
            if (v.is_zero()) continue;
            json out = json::object();
            for (const auto& [id, c] : v.terms()) out[id.to_string()] = c.to_string();
            rows.push_back(json::array({a.to_string(), b.to_string(), out}));
        }
    return rows;
}

LinMap map2_from_json(const json& rows, const Field& f) {
    std::map<std::vector<BasisId>, LinComb> table;
    for (const auto& row : rows) {
        BasisId a = BasisId::parse(row.at(0).get<std::string>());
        BasisId b = BasisId::parse(row.at(1).get<std::string>());
        LinComb out = LinComb::zero(f);
        for (auto& [k, v] : row.at(2).items())
            out.add_term(BasisId::parse(k), Scalar::parse(f, v.get<std::string>()));
        table.emplace(std::vector<BasisId>{a, b}, std::move(out));
    }
    return LinMap::table(2, f, std::move(table));
}

}  // namespace

std::string datum_to_text(const ExtendingDatum& omega) {
    if (!omega.base->basis.is_finite() || !omega.hpart->basis.is_finite())
        fail(Error::Kind::Io, "only finite extending data serialize");
    json j;
    j["base"] = json::parse(algebra_to_text(*omega.base));
    j["hpart"] = json::parse(algebra_to_text(*omega.hpart));
    const auto& wa = omega.base->basis.elements();
    const auto& wh = omega.hpart->basis.elements();
    j["lact"] = map2_to_json(omega.lact, wh, wa);
    j["ract"] = map2_to_json(omega.ract, wh, wa);
    j["cocycle"] = map2_to_json(omega.cocycle, wh, wh);
    return j.dump(2) + "\n";
}

DatumPtr datum_from_text(const std::string& text) {
    json j = json::parse(text);
    HopfPtr base = algebra_from_text(j.at("base").dump());
    HopfPtr hpart = algebra_from_text(j.at("hpart").dump());
    Field f = base->field;
    LinMap lact = j.contains("lact") && !j["lact"].empty() ? map2_from_json(j["lact"], f)
                                                           : trivial_lact(base, hpart);
    LinMap ract = j.contains("ract") && !j["ract"].empty() ? map2_from_json(j["ract"], f)
                                                           : trivial_ract(base, hpart);
    LinMap coc = j.contains("cocycle") && !j["cocycle"].empty() ? map2_from_json(j["cocycle"], f)
                                                                : trivial_cocycle(base, hpart);
    return std::make_shared<const ExtendingDatum>(base, hpart, std::move(ract), std::move(lact),
                                                  std::move(coc));
}

DatumPtr load_datum(const std::string& path) { return datum_from_text(read_file(path)); }

void save_datum(const std::string& path, const ExtendingDatum& omega) {
    write_file(path, datum_to_text(omega));
}

void save_product(const std::string& path, const ProductAlgebra& prod) {
    json j = json::parse(algebra_to_text(*prod.hopf));
    const char* prov = "unified";
    switch (prod.provenance) {
        case Provenance::Unified: prov = "unified"; break;
        case Provenance::DoubleCross: prov = "dcp"; break;
        case Provenance::Crossed: prov = "crossed"; break;
        case Provenance::Gqd: prov = "gqd"; break;
        case Provenance::CoadjointDouble: prov = "coadjoint-double"; break;
        case Provenance::Tensor: prov = "tensor"; break;
    }
    j["meta"]["provenance"] = prov;
    j["meta"]["datum"] = datum_to_text(*prod.datum);
    if (prod.pairing) j["meta"]["pairing"] = form_to_text(*prod.pairing);
    write_file(path, j.dump(2) + "\n");
}

ProductPtr load_product(const std::string& path) {
    json j = json::parse(read_file(path));
    if (!j.contains("meta") || !j["meta"].contains("datum"))
        fail(Error::Kind::Parse, "product file lacks an embedded datum");
    DatumPtr omega = datum_from_text(j["meta"]["datum"].get<std::string>());
    ProductPtr built = build_unified_product(omega);
    std::string prov = j["meta"].value("provenance", std::string("unified"));

    auto out = std::make_shared<ProductAlgebra>(*built);
    if (prov == "dcp") out->provenance = Provenance::DoubleCross;
    else if (prov == "crossed") out->provenance = Provenance::Crossed;
    else if (prov == "gqd") out->provenance = Provenance::Gqd;
    else if (prov == "coadjoint-double") out->provenance = Provenance::CoadjointDouble;
    else if (prov == "tensor") out->provenance = Provenance::Tensor;
    if (j["meta"].contains("pairing"))
        out->pairing = form_from_text(j["meta"]["pairing"].get<std::string>(), omega->hpart,
                                      omega->base);

    // Cross-check the stored tables against the rebuild.
    HopfPtr loaded = algebra_from_text([&] {
        json copy = j;
        copy["meta"].erase("datum");
        copy["meta"].erase("provenance");
        copy["meta"].erase("pairing");
        return copy.dump();
    }());
    VerificationReport eq = structure_equal(*out->hopf, *loaded, loaded->basis.window());
    if (!eq.all_pass())
        fail(Error::Kind::Validation, "stored product tables disagree with the rebuilt product:\n" +
                                          eq.to_text());
    return out;
}

std::string quad_to_text(const Quadruple& quad) {
    json j;
    j["p"] = json::parse(form_to_text(quad.p));
    j["tau"] = json::parse(form_to_text(quad.tau));
    j["u"] = json::parse(form_to_text(quad.u));
    j["v"] = json::parse(form_to_text(quad.v));
    return j.dump(2) + "\n";
}

Quadruple quad_from_text(const std::string& text, const ProductAlgebra& prod) {
    json j = json::parse(text);
    HopfPtr A = prod.datum->base;
    HopfPtr H = prod.datum->hpart;
    return Quadruple{form_from_text(j.at("p").dump(), A, A).renamed("p"),
                     form_from_text(j.at("tau").dump(), H, H).renamed("tau"),
                     form_from_text(j.at("u").dump(), A, H).renamed("u"),
                     form_from_text(j.at("v").dump(), H, A).renamed("v")};
}

Quadruple load_quad(const std::string& path, const ProductAlgebra& prod) {
    return quad_from_text(read_file(path), prod);
}

void save_quad(const std::string& path, const Quadruple& quad) {
    write_file(path, quad_to_text(quad));
}

}  // namespace hopf::hzf
