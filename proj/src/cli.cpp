#include "hopf/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopf/dual.hpp"
#include "hopf/hzf.hpp"
#include "hopf/search.hpp"
#include "hopf/ybe.hpp"

namespace hopf::cli {

namespace {

using nlohmann::json;

struct Output {
    std::ostream& out;
    std::string json_path;
    std::vector<json> records;

    void report(const VerificationReport& r) {
        out << r.to_text();
        for (const auto& item : r.items) {
            json rec;
            rec["subject"] = r.subject;
            rec["axiom"] = item.axiom;
            rec["status"] = item.status == CheckStatus::Pass   ? "pass"
                            : item.status == CheckStatus::Fail ? "fail"
                                                               : "error";
            if (!item.witness.empty()) {
                std::string w;
                for (const auto& id : item.witness) w += (w.empty() ? "" : ",") + id.to_string();
                rec["witness"] = w;
                rec["lhs"] = item.lhs;
                rec["rhs"] = item.rhs;
            }
            if (!item.detail.empty()) rec["detail"] = item.detail;
            records.push_back(std::move(rec));
        }
    }

    void flush() {
        if (json_path.empty()) return;
        std::ostringstream ss;
        for (const auto& rec : records) ss << rec.dump() << "\n";
        hzf::write_file(json_path, ss.str());
    }
};

// "fixture:NAME/KEY" or a file path.
HopfPtr resolve_algebra(const std::string& ref) {
    if (ref.rfind("fixture:", 0) == 0) {
        std::string body = ref.substr(8);
        auto slash = body.find('/');
        if (slash == std::string::npos) fail(Error::Kind::Parse, "expected fixture:NAME/KEY");
        Fixture fx = load_fixture(body.substr(0, slash));
        std::string key = body.substr(slash + 1);
        if (fx.products.count(key)) return fx.product(key)->hopf;
        return fx.algebra(key);
    }
    return hzf::load_algebra(ref);
}

ProductPtr resolve_product(const std::string& ref) {
    if (ref.rfind("fixture:", 0) == 0) {
        std::string body = ref.substr(8);
        auto slash = body.find('/');
        Fixture fx = load_fixture(slash == std::string::npos ? body : body.substr(0, slash));
        return fx.product(slash == std::string::npos ? "double" : body.substr(slash + 1));
    }
    return hzf::load_product(ref);
}

BilinearForm resolve_form(const std::string& ref, HopfPtr left, HopfPtr right) {
    if (ref.rfind("fixture:", 0) == 0) {
        std::string body = ref.substr(8);
        auto slash = body.find('/');
        if (slash == std::string::npos) fail(Error::Kind::Parse, "expected fixture:NAME/FORM");
        Fixture fx = load_fixture(body.substr(0, slash));
        return fx.form(body.substr(slash + 1));
    }
    return hzf::load_form(ref, left, right);
}

int finish(Output& o, bool all_pass) {
    o.flush();
    return all_pass ? 0 : 1;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact kernel for Hopf-algebra products and braidings"};
    app.require_subcommand(1);

    std::string json_path;
    long window_override = 0;
    bool all_failures = false;
    app.add_option("--json", json_path, "write machine-readable JSON lines to this path");
    app.add_option("--window", window_override, "override rule-backed verification windows");
    app.add_flag("--all-failures", all_failures, "list every failing tuple, not just the first");

    auto opts = [&] {
        CheckOptions o;
        o.all_failures = all_failures;
        o.window_bound = window_override;
        return o;
    };

    // check hopf|pairing|braiding|datum
    auto* check = app.add_subcommand("check", "verify axiom systems");
    std::string check_target, check_left, check_right, check_algebra;
    auto* check_hopf_cmd = check->add_subcommand("hopf", "bialgebra/Hopf axioms");
    check_hopf_cmd->add_option("file", check_target, "algebra (.hzf or fixture:NAME/KEY)")->required();
    auto* check_pairing_cmd = check->add_subcommand("pairing", "skew-pairing axioms");
    check_pairing_cmd->add_option("file", check_target)->required();
    check_pairing_cmd->add_option("--left", check_left)->required();
    check_pairing_cmd->add_option("--right", check_right)->required();
    auto* check_braiding_cmd = check->add_subcommand("braiding", "braiding axioms");
    check_braiding_cmd->add_option("file", check_target)->required();
    check_braiding_cmd->add_option("--algebra", check_algebra)->required();
    auto* check_datum_cmd = check->add_subcommand("datum", "extending-structure conditions");
    check_datum_cmd->add_option("file", check_target)->required();

    // build
    auto* build = app.add_subcommand("build", "construct a product algebra");
    std::string build_datum, build_out, build_coadjoint;
    build->add_option("--datum", build_datum, "extending-datum JSON");
    build->add_option("--coadjoint", build_coadjoint, "algebra for the coadjoint quantum double");
    build->add_option("--out", build_out, "output .hzf path")->required();

    // verify sigma
    auto* verify = app.add_subcommand("verify", "braiding <-> quadruple correspondence");
    auto* verify_sigma = verify->add_subcommand("sigma");
    std::string vs_product, vs_quad, vs_sigma, vs_direction = "roundtrip";
    verify_sigma->add_option("--product", vs_product)->required();
    verify_sigma->add_option("--quad", vs_quad);
    verify_sigma->add_option("--sigma", vs_sigma);
    verify_sigma->add_option("--direction", vs_direction)
        ->check(CLI::IsMember({"assemble", "decompose", "roundtrip"}));

    // ybe
    auto* ybe_cmd = app.add_subcommand("ybe", "R-matrix and Yang-Baxter check");
    std::string ybe_braiding, ybe_algebra, ybe_comodule = "regular", ybe_out;
    ybe_cmd->add_option("--braiding", ybe_braiding)->required();
    ybe_cmd->add_option("--algebra", ybe_algebra)->required();
    ybe_cmd->add_option("--comodule", ybe_comodule)->check(CLI::IsMember({"regular"}));
    ybe_cmd->add_option("--out", ybe_out, "matrix export path");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive braiding search over F_p");
    std::string enum_algebra, enum_out;
    long enum_prime = 3;
    std::size_t enum_max_free = 12;
    enum_cmd->add_option("--algebra", enum_algebra)->required();
    enum_cmd->add_option("--prime", enum_prime)->required();
    enum_cmd->add_option("--max-free", enum_max_free);
    enum_cmd->add_option("--out", enum_out, "JSON lines output");

    // demo / export
    auto* demo = app.add_subcommand("demo", "print a fixture's tables and re-verification");
    std::string demo_name;
    demo->add_option("name", demo_name)->required();
    auto* export_cmd = app.add_subcommand("export", "write a fixture's files");
    std::string export_name, export_dir = ".";
    export_cmd->add_option("name", export_name)->required();
    export_cmd->add_option("--dir", export_dir);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    Output o{out, json_path, {}};

    if (check_hopf_cmd->parsed()) {
        HopfPtr H = resolve_algebra(check_target);
        VerificationReport r = check_hopf(*H, opts());
        o.report(r);
        return finish(o, r.all_pass());
    }
    if (check_pairing_cmd->parsed()) {
        HopfPtr L = resolve_algebra(check_left);
        HopfPtr R = resolve_algebra(check_right);
        BilinearForm form = resolve_form(check_target, L, R);
        VerificationReport r = check_skew_pairing(form, opts());
        o.report(r);
        return finish(o, r.all_pass());
    }
    if (check_braiding_cmd->parsed()) {
        HopfPtr A = resolve_algebra(check_algebra);
        BilinearForm form = resolve_form(check_target, A, A);
        VerificationReport r = check_braiding(form, opts());
        o.report(r);
        return finish(o, r.all_pass());
    }
    if (check_datum_cmd->parsed()) {
        DatumPtr omega = hzf::load_datum(check_target);
        VerificationReport r = check_extending_structure(*omega, opts());
        o.report(r);
        return finish(o, r.all_pass());
    }
    if (build->parsed()) {
        if (!build_coadjoint.empty()) {
            ProductPtr prod = coadjoint_double(resolve_algebra(build_coadjoint));
            hzf::save_product(build_out, *prod);
            out << "built " << prod->hopf->name << " (" << prod->hopf->basis.elements().size()
                << "-dimensional) -> " << build_out << "\n";
            return 0;
        }
        if (build_datum.empty()) fail(Error::Kind::Parse, "build needs --datum or --coadjoint");
        DatumPtr omega = hzf::load_datum(build_datum);
        ProductPtr prod = build_unified_product(omega);
        hzf::save_product(build_out, *prod);
        out << "built " << prod->hopf->name << " -> " << build_out << "\n";
        return 0;
    }
    if (verify_sigma->parsed()) {
        ProductPtr prod = resolve_product(vs_product);
        bool ok = true;
        if (vs_direction == "assemble" || vs_direction == "roundtrip") {
            if (vs_quad.empty()) fail(Error::Kind::Parse, "--quad required for this direction");
            Quadruple quad = hzf::load_quad(vs_quad, *prod);
            VerificationReport qr = check_quadruple(quad, *prod, opts());
            o.report(qr);
            ok = ok && qr.all_pass();
            BilinearForm sigma = assemble_sigma(quad, *prod, /*force=*/true);
            VerificationReport br =
                check_braiding(sigma, prod->hopf->basis.window_with_bound(window_override), opts());
            o.report(br);
            ok = ok && br.all_pass();
            if (vs_direction == "roundtrip") {
                Quadruple back = decompose_sigma(sigma, *prod);
                bool same = forms_identical(back.p, quad.p) && forms_identical(back.tau, quad.tau) &&
                            forms_identical(back.u, quad.u) && forms_identical(back.v, quad.v);
                out << (same ? "round trip: quadruple reproduced exactly\n"
                             : "round trip: MISMATCH after decomposition\n");
                ok = ok && same;
            }
        }
        if (vs_direction == "decompose") {
            if (vs_sigma.empty()) fail(Error::Kind::Parse, "--sigma required for this direction");
            BilinearForm sigma = resolve_form(vs_sigma, prod->hopf, prod->hopf);
            VerificationReport br =
                check_braiding(sigma, prod->hopf->basis.window_with_bound(window_override), opts());
            o.report(br);
            ok = ok && br.all_pass();
            Quadruple quad = decompose_sigma(sigma, *prod);
            VerificationReport qr = check_quadruple(quad, *prod, opts());
            o.report(qr);
            ok = ok && qr.all_pass();
            BilinearForm again = assemble_sigma(quad, *prod, /*force=*/true);
            bool same = forms_identical(again, sigma);
            out << (same ? "round trip: braiding reproduced exactly\n"
                         : "round trip: MISMATCH after assembly\n");
            ok = ok && same;
        }
        return finish(o, ok);
    }
    if (ybe_cmd->parsed()) {
        HopfPtr A = resolve_algebra(ybe_algebra);
        BilinearForm p = resolve_form(ybe_braiding, A, A);
        Comodule M = Comodule::regular(A);
        SquareMatrix R = r_matrix(p, M);
        out << "R matrix: " << R.size << "x" << R.size << " over " << A->field.to_string() << "\n";
        VerificationReport r = check_ybe(R);
        o.report(r);
        if (!ybe_out.empty()) hzf::write_file(ybe_out, R.to_text());
        return finish(o, r.all_pass());
    }
    if (enum_cmd->parsed()) {
        HopfPtr A = resolve_algebra(enum_algebra);
        EnumerationResult res = enumerate_braidings(A, enum_prime, enum_max_free);
        out << res.space.describe() << "\n";
        out << res.forms.size() << " braidings found\n";
        if (!enum_out.empty()) {
            std::ostringstream ss;
            for (std::size_t i = 0; i < res.forms.size(); ++i) {
                json rec;
                rec["index"] = i;
                json entries = json::array();
                for (const auto& a : A->basis.elements())
                    for (const auto& b : A->basis.elements()) {
                        Scalar v = res.forms[i](a, b);
                        if (!v.is_zero())
                            entries.push_back(
                                json::array({a.to_string(), b.to_string(), v.to_string()}));
                    }
                rec["entries"] = std::move(entries);
                ss << rec.dump() << "\n";
            }
            hzf::write_file(enum_out, ss.str());
        }
        return 0;
    }
    if (demo->parsed()) {
        Fixture fx = load_fixture(demo_name);
        out << "fixture " << fx.name << "\n";
        for (const auto& [key, alg] : fx.algebras) {
            out << "  algebra " << key << ": " << alg->basis.describe() << " over "
                << alg->field.to_string() << "\n";
        }
        for (const auto& [key, form] : fx.forms) {
            out << "  form " << key << " on (" << form.left()->name << ", " << form.right()->name
                << ")\n";
            auto wl = form.left()->basis.window_with_bound(2);
            auto wr = form.right()->basis.window_with_bound(2);
            std::size_t shown = 0;
            for (const auto& a : wl) {
                for (const auto& b : wr) {
                    Scalar v = form(a, b);
                    if (v.is_zero()) continue;
                    out << "    " << a.to_string() << " , " << b.to_string() << " -> "
                        << v.to_string() << "\n";
                    if (++shown >= 24) break;
                }
                if (shown >= 24) break;
            }
        }
        for (const auto& [key, prod] : fx.products)
            out << "  product " << key << ": " << prod->hopf->basis.describe() << "\n";
        VerificationReport r = verify_fixture(demo_name, opts());
        o.report(r);
        return finish(o, r.all_pass());
    }
    if (export_cmd->parsed()) {
        Fixture fx = load_fixture(export_name);
        for (const auto& [key, alg] : fx.algebras) {
            std::string rule;
            if (!alg->basis.is_finite()) rule = key == "kZ" ? "kZ" : (key == "kX" ? "kX" : "");
            std::string path = export_dir + "/" + fx.name + "-" + key + ".hzf";
            hzf::save_algebra(path, *alg, rule);
            out << "wrote " << path << "\n";
        }
        for (const auto& [key, form] : fx.forms) {
            if (!form.left()->basis.is_finite() || !form.right()->basis.is_finite()) continue;
            std::string path = export_dir + "/" + fx.name + "-" + key + ".form.json";
            hzf::save_form(path, form);
            out << "wrote " << path << "\n";
        }
        for (const auto& [key, prod] : fx.products) {
            if (!prod->hopf->basis.is_finite()) continue;
            std::string path = export_dir + "/" + fx.name + "-" + key + ".hzf";
            hzf::save_product(path, *prod);
            out << "wrote " << path << "\n";
        }
        return 0;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case Error::Kind::Bound: return 3;
            case Error::Kind::Validation: return 1;
            default: return 2;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace hopf::cli
