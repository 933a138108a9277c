// Command-line front end: batch verifications over matrix files and the
// monster/moonshine checks, with deterministic text or JSON reports.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage or
// input error, 3 internal invariant violation (a bug, not bad input).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gkm/denominator.hpp"
#include "gkm/lie_oracle.hpp"
#include "gkm/matrix.hpp"
#include "gkm/moonshine.hpp"
#include "gkm/tables.hpp"
#include "gkm/witt.hpp"

using nlohmann::json;

namespace {

json mismatches_json(const gkm::MismatchReport& rep) {
    json out = json::array();
    for (const auto& m : rep.mismatches)
        out.push_back({{"exponent", m.exponent.str()},
                       {"lhs", m.lhs.get_str()},
                       {"rhs", m.rhs.get_str()}});
    return out;
}

json report_json(const gkm::MismatchReport& rep) {
    return {{"ok", rep.ok()}, {"compared", rep.compared}, {"mismatches", mismatches_json(rep)}};
}

void print_report(const std::string& name, const gkm::MismatchReport& rep, std::ostream& os) {
    if (rep.ok())
        os << name << "\tok\t" << rep.compared << " coefficients\n";
    else {
        os << name << "\tFAIL\t" << rep.mismatches.size() << " of " << rep.compared
           << " coefficients\n";
        os << rep.str();
    }
}

json counts_json(const gkm::DegreeCounts& t) {
    json out = json::object();
    for (const auto& [deg, c] : t) out[deg.str()] = c.get_str();
    return out;
}

gkm::BorcherdsMatrix load_valid_matrix(const std::string& path) {
    return gkm::load_matrix(path);  // parse errors surface as invalid_argument
}

// a failed check: report already printed, exit 1
struct check_failed {};

void require_valid(const gkm::BorcherdsMatrix& m, bool as_json) {
    auto rep = gkm::validate(m);
    if (rep.ok()) return;
    if (as_json) {
        json out = {{"valid", false}, {"violations", json::array()}};
        for (const auto& v : rep.violations)
            out["violations"].push_back(
                {{"condition", v.condition}, {"i", v.i}, {"j", v.j}, {"detail", v.detail}});
        std::cout << out.dump() << "\n";
    } else {
        std::cout << rep.str();
    }
    throw check_failed{};
}

gkm::GeneratorTable load_gens(const std::string& path) {
    std::ifstream in(path);
    gkm::require(in.good(), "cannot open generator table: " + path);
    gkm::GeneratorTable g;
    g.n = gkm::parse_counts(in);
    gkm::require(!g.n.empty(), "empty generator table: " + path);
    g.check();
    return g;
}

std::string word_str(const std::vector<int>& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(w[i]);
    }
    return s;
}

int run_validate(const std::string& path, bool as_json) {
    auto m = load_valid_matrix(path);
    auto rep = gkm::validate(m);
    if (as_json) {
        json out = {{"valid", rep.ok()}, {"violations", json::array()}};
        for (const auto& v : rep.violations)
            out["violations"].push_back(
                {{"condition", v.condition}, {"i", v.i}, {"j", v.j}, {"detail", v.detail}});
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (rep.ok() ? "ok\n" : rep.str());
    }
    return rep.ok() ? 0 : 1;
}

int run_classify(const std::string& path, bool as_json) {
    auto m = load_valid_matrix(path);
    require_valid(m, as_json);
    auto cls = gkm::classify(m);
    if (as_json) {
        json out = {{"real", cls.real_indices},
                    {"imaginary", cls.imaginary_indices},
                    {"theorem51_applicable", cls.theorem51_applicable}};
        std::cout << out.dump() << "\n";
    } else {
        auto line = [](const char* tag, const std::vector<size_t>& v) {
            std::cout << tag << '\t';
            for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
            std::cout << '\n';
        };
        line("real", cls.real_indices);
        line("imaginary", cls.imaginary_indices);
        std::cout << "theorem51_applicable\t" << (cls.theorem51_applicable ? "true" : "false")
                  << "\n";
    }
    return 0;
}

int run_center_pairs(const std::string& path, bool as_json) {
    auto m = load_valid_matrix(path);
    require_valid(m, as_json);
    auto p = gkm::center_pairs(m);
    if (as_json) {
        json out = {{"total", p.total.get_str()}};
        json dense = json::array();
        for (auto [i, j] : p.dense_pairs) dense.push_back({i, j});
        out["dense_pairs"] = dense;
        json within = json::object(), cross = json::object();
        for (const auto& [b, c] : p.within) within[std::to_string(b)] = c.get_str();
        for (const auto& [bb, c] : p.cross)
            cross[std::to_string(bb.first) + "," + std::to_string(bb.second)] = c.get_str();
        out["within"] = within;
        out["cross"] = cross;
        std::cout << out.dump() << "\n";
    } else {
        for (auto [i, j] : p.dense_pairs) std::cout << "pair\t" << i << "," << j << "\n";
        for (const auto& [b, c] : p.within)
            std::cout << "within\t" << b << "\t" << c.get_str() << "\n";
        for (const auto& [bb, c] : p.cross)
            std::cout << "cross\t" << bb.first << "," << bb.second << "\t" << c.get_str() << "\n";
        std::cout << "total\t" << p.total.get_str() << "\n";
    }
    return 0;
}

int run_witt(const std::string& gens_path, long height, std::optional<long> total, bool verify,
             bool as_json) {
    auto g = load_gens(gens_path);
    gkm::Multidegree max(std::vector<long>(g.arity(), height));
    auto dims = gkm::witt_dimensions(g, max, total);
    gkm::MismatchReport rep;
    if (verify) {
        gkm::Box box = gkm::Box::orthant(g.arity(), height, total);
        rep = gkm::verify_witt_identity(g, dims, box);
    }
    if (as_json) {
        json out = {{"dims", counts_json(dims.d)}};
        if (verify) out["identity"] = report_json(rep);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << gkm::counts_str(dims.d);
        if (verify) print_report("identity", rep, std::cout);
    }
    return rep.ok() ? 0 : 1;
}

int run_oracle(const std::string& path, long height, bool show_basis, bool as_json) {
    auto m = load_valid_matrix(path);
    require_valid(m, as_json);
    auto res = gkm::quotient_dims(m, height, show_basis);
    if (as_json) {
        json out = {{"dims", counts_json(res.dims.d)}};
        if (show_basis) {
            json basis = json::object();
            for (const auto& [deg, words] : res.basis) {
                json list = json::array();
                for (const auto& w : words) list.push_back(word_str(w));
                basis[deg.str()] = list;
            }
            out["basis"] = basis;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << gkm::counts_str(res.dims.d);
        if (show_basis)
            for (const auto& [deg, words] : res.basis) {
                std::cout << "basis\t" << deg.str() << '\t';
                for (size_t i = 0; i < words.size(); ++i)
                    std::cout << (i ? " " : "") << word_str(words[i]);
                std::cout << '\n';
            }
    }
    return 0;
}

int run_denom(const std::string& path, long height, const std::string& mode, bool as_json) {
    auto m = load_valid_matrix(path);
    require_valid(m, as_json);
    auto rep = (mode == "eq6") ? gkm::verify_eq6(m, height) : gkm::verify_cor52(m, height);
    if (as_json) {
        json out = {{"mode", mode}, {"height", height}};
        out["identity"] = report_json(rep);
        std::cout << out.dump() << "\n";
    } else {
        print_report(mode, rep, std::cout);
    }
    return rep.ok() ? 0 : 1;
}

int run_compare(const std::string& path, long height, bool as_json) {
    auto m = load_valid_matrix(path);
    require_valid(m, as_json);
    auto rep = gkm::verify_theorem51(m, height);
    if (as_json) {
        json out = {{"height", height}, {"split", report_json(rep)}};
        std::cout << out.dump() << "\n";
    } else {
        print_report("split", rep, std::cout);
    }
    return rep.ok() ? 0 : 1;
}

int run_moonshine(long order, const std::string& emit_path, bool verify_product, bool verify_kang,
                  bool verify_dims, std::optional<long> perturb_index,
                  std::optional<long> perturb_delta, bool as_json) {
    long needed = order;
    if (verify_product || verify_dims) needed = std::max(needed, order * order);
    if (verify_kang) needed = std::max(needed, (order / 2) * (order - order / 2));
    auto J = gkm::j_coefficients(needed);
    json out = {{"order", order}};
    if (perturb_index) {
        J = J.with_perturbed(*perturb_index, perturb_delta.value_or(1));
        out["perturbed"] = {{"index", *perturb_index}, {"delta", perturb_delta.value_or(1)}};
    }

    if (!emit_path.empty()) {
        std::ofstream f(emit_path);
        gkm::require(f.good(), "cannot open output file: " + emit_path);
        for (long n = -1; n <= order; ++n) f << n << '\t' << J.at(n).get_str() << '\n';
    }

    bool failed = false;
    if (verify_product) {
        auto rep = gkm::verify_monster_product(order, J);
        failed = failed || !rep.ok();
        if (as_json)
            out["product"] = report_json(rep);
        else
            print_report("product", rep, std::cout);
    }
    if (verify_dims) {
        auto rep = gkm::verify_monster_dims(order, J);
        failed = failed || !rep.ok();
        if (as_json)
            out["dims"] = report_json(rep);
        else
            print_report("dims", rep, std::cout);
    }
    if (verify_kang) {
        auto rep = gkm::kang_check(order, J);
        failed = failed || !rep.ok();
        if (as_json) {
            json k = {{"ok", rep.ok()}, {"mismatches", json::array()}};
            for (const auto& m : rep.mismatches) {
                json terms = json::array();
                for (const auto& [kk, v] : m.terms) terms.push_back({kk, gkm::rat_str(v)});
                k["mismatches"].push_back({{"degree", m.degree.str()},
                                           {"expected", m.expected.get_str()},
                                           {"computed", gkm::rat_str(m.computed)},
                                           {"terms", terms}});
            }
            out["kang"] = k;
        } else {
            if (rep.ok())
                std::cout << "kang\tok\n";
            else
                std::cout << "kang\tFAIL\t" << rep.mismatches.size() << " relations\n"
                          << rep.str();
        }
    }
    if (as_json) std::cout << out.dump() << "\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded-dimension and denominator-identity checks for Borcherds matrices"};
    app.require_subcommand(1);
    int threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--threads", threads,
                   "worker cap; accepted for interface stability, execution is sequential")
        ->check(CLI::PositiveNumber);

    std::string matrix_path, gens_path, emit_path, mode = "cor52";
    long height = 4, order = 2;
    std::optional<long> total, perturb_index, perturb_delta;
    bool as_json = false, verify = false, show_basis = false;
    bool verify_product = false, verify_kang = false, verify_dims = false;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "JSON output"); };
    auto add_matrix = [&](CLI::App* sub) {
        sub->add_option("--matrix", matrix_path, "matrix file")->required();
    };

    auto* sub_validate = app.add_subcommand("validate", "check the matrix conditions");
    add_matrix(sub_validate);
    add_json(sub_validate);

    auto* sub_classify = app.add_subcommand("classify", "real/imaginary split and applicability");
    add_matrix(sub_classify);
    add_json(sub_classify);

    auto* sub_center = app.add_subcommand("center-pairs", "pairs of equal matrix columns");
    add_matrix(sub_center);
    add_json(sub_center);

    auto* sub_witt = app.add_subcommand("witt", "free Lie algebra dimensions from a table");
    sub_witt->add_option("--gens", gens_path, "generator table file")->required();
    sub_witt->add_option("--height", height, "componentwise degree bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub_witt->add_option("--total", total, "total height cap");
    sub_witt->add_flag("--verify", verify, "check the product identity");
    add_json(sub_witt);

    auto* sub_oracle = app.add_subcommand("oracle", "graded dimensions by direct elimination");
    add_matrix(sub_oracle);
    sub_oracle->add_option("--height", height, "height bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub_oracle->add_flag("--show-basis", show_basis, "print surviving bracket words");
    add_json(sub_oracle);

    auto* sub_denom = app.add_subcommand("denom", "denominator identity check");
    add_matrix(sub_denom);
    sub_denom->add_option("--height", height, "height bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub_denom->add_option("--mode", mode, "cor52 (factored) or eq6 (full)")
        ->check(CLI::IsMember({"cor52", "eq6"}));
    add_json(sub_denom);

    auto* sub_compare = app.add_subcommand("compare", "split-vs-oracle dimension agreement");
    add_matrix(sub_compare);
    sub_compare->add_option("--height", height, "height bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_json(sub_compare);

    auto* sub_moon = app.add_subcommand("moonshine", "j-function and monster identities");
    sub_moon->add_option("--order", order, "truncation order")
        ->required()
        ->check(CLI::PositiveNumber);
    sub_moon->add_option("--emit-coeffs", emit_path, "write n<TAB>c(n) lines to a file");
    sub_moon->add_flag("--verify-product", verify_product, "check u(J(u)-J(v)) = product");
    sub_moon->add_flag("--verify-kang", verify_kang, "check the coefficient relations");
    sub_moon->add_flag("--verify-dims", verify_dims, "check root multiplicities = c(ij)");
    auto* pi = sub_moon->add_option("--perturb-index", perturb_index,
                                    "fault injection: which c(n) to shift");
    sub_moon->add_option("--perturb-delta", perturb_delta, "fault injection: shift amount")
        ->needs(pi);
    add_json(sub_moon);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(sub_validate)) return run_validate(matrix_path, as_json);
        if (app.got_subcommand(sub_classify)) return run_classify(matrix_path, as_json);
        if (app.got_subcommand(sub_center)) return run_center_pairs(matrix_path, as_json);
        if (app.got_subcommand(sub_witt))
            return run_witt(gens_path, height, total, verify, as_json);
        if (app.got_subcommand(sub_oracle))
            return run_oracle(matrix_path, height, show_basis, as_json);
        if (app.got_subcommand(sub_denom)) return run_denom(matrix_path, height, mode, as_json);
        if (app.got_subcommand(sub_compare)) return run_compare(matrix_path, height, as_json);
        if (app.got_subcommand(sub_moon))
            return run_moonshine(order, emit_path, verify_product, verify_kang, verify_dims,
                                 perturb_index, perturb_delta, as_json);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const check_failed&) {
        return 1;
    } catch (const gkm::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
