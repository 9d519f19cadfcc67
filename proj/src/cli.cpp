#include "cyclerange/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclerange/boundary.hpp"
#include "cyclerange/charpoly.hpp"
#include "cyclerange/common.hpp"
#include "cyclerange/extremal.hpp"
#include "cyclerange/inclusion.hpp"
#include "cyclerange/permsearch.hpp"
#include "cyclerange/rng.hpp"
#include "cyclerange/spectra.hpp"

namespace cyclerange::cli {

namespace {

using nlohmann::json;

std::string fmt17(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string poly_text(const poly::Poly& f) {
    const int deg = static_cast<int>(f.size()) - 1;
    std::string s;
    for (int i = 0; i <= deg; ++i) {
        double c = f[i];
        if (c == 0.0 && deg > 0 && i > 0) continue;
        int p = deg - i;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        double mag = std::abs(c);
        if (p == 0 || mag != 1.0) s += fmt17(mag);
        if (p > 0) {
            if (mag != 1.0) s += " ";
            s += "z";
            if (p > 1) s += "^" + std::to_string(p);
        }
    }
    return s.empty() ? "0" : s;
}

std::string verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Included: return "Included";
        case VerdictKind::NotIncluded: return "NotIncluded";
        default: return "Indeterminate";
    }
}

json verdict_json(const InclusionVerdict& v) {
    json j;
    j["kind"] = verdict_name(v.kind);
    j["margin"] = v.margin;
    j["tolerance"] = v.tolerance;
    j["witness_t"] = v.witness_t ? json(*v.witness_t) : json(nullptr);
    j["witness_theta"] = v.witness_theta ? json(*v.witness_theta) : json(nullptr);
    return j;
}

json family_json(const CharPolyFamily& fam) {
    return json{{"n", fam.n}, {"f", fam.f}, {"alpha", fam.alpha}};
}

std::string class_text(const DihedralClass& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.rep.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.rep[i]);
    }
    return s + ")";
}

std::optional<double> env_tolerance() {
    const char* v = std::getenv("CYCLERANGE_TOL");
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    double x = std::strtod(v, &end);
    if (end == v || !(x > 0.0)) throw validation_error("CYCLERANGE_TOL is not a positive number");
    return x;
}

struct Options {
    std::string format = "text";
    int threads = 0;
};

void emit(std::ostream& out, const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        out << j.dump(2) << "\n";
    else
        out << text;
}

}  // namespace

namespace {

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw validation_error("weights: empty entry in '" + text + "'");
        char* end = nullptr;
        double x = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0')
            throw validation_error("weights: cannot parse '" + item + "'");
        vals.push_back(x);
    }
    return vals;
}

}  // namespace

WeightVector parse_weights(const std::string& text) {
    bool squared = text.rfind("sq:", 0) == 0;
    std::vector<double> vals = parse_number_list(squared ? text.substr(3) : text);
    if (vals.size() < 2) throw validation_error("weights: need at least two entries");
    return squared ? WeightVector::from_squares(std::move(vals)) : WeightVector(std::move(vals));
}

namespace {

int cmd_charpoly(const WeightVector& w, const Options& opt, std::ostream& out) {
    CharPolyFamily fam = build_family(w);
    if (opt.format == "csv") {
        out << "power,coefficient\n";
        for (int i = 0; i <= fam.n; ++i)
            out << (fam.n - i) << "," << fmt17(fam.f[i]) << "\n";
        out << "alpha," << fmt17(fam.alpha) << "\n";
        return 0;
    }
    std::string text = "f(z) = " + poly_text(fam.f) + "\nalpha = " + fmt17(fam.alpha) + "\n";
    emit(out, opt, family_json(fam), text);
    return 0;
}

int cmd_radius(const WeightVector& w, const Options& opt, std::ostream& out) {
    double r = numerical_radius(w);
    emit(out, opt, json{{"radius", r}}, "radius = " + fmt17(r) + "\n");
    return 0;
}

int cmd_support(const WeightVector& w, double t, const Options& opt, std::ostream& out) {
    double z = support_max(w, t);
    emit(out, opt, json{{"t", t}, {"support", z}},
         "support(t=" + fmt17(t) + ") = " + fmt17(z) + "\n");
    return 0;
}

int cmd_include(const WeightVector& a, const WeightVector& b, const std::string& method,
                int grid, const Options& opt, std::ostream& out) {
    if (grid < 3) throw validation_error("include: grid must be at least 3");
    IncludeMethod m = IncludeMethod::Auto;
    if (method == "grid") m = IncludeMethod::Grid;
    else if (method == "closed") m = IncludeMethod::Closed;
    else if (method != "auto") throw validation_error("include: unknown method '" + method + "'");
    InclusionVerdict v = includes(a, b, m, grid, env_tolerance());
    std::string text = verdict_name(v.kind) + " (margin " + fmt17(v.margin) + ")";
    if (v.witness_t) text += " witness t=" + fmt17(*v.witness_t);
    if (v.witness_theta) text += " witness theta=" + fmt17(*v.witness_theta);
    emit(out, opt, verdict_json(v), text + "\n");
    return v.kind == VerdictKind::Included ? 0 : 1;
}

int cmd_boundary(const WeightVector& w, int points, const std::string& out_file,
                 const Options& opt, std::ostream& out) {
    BoundaryCurve curve = sample_boundary(w, points, opt.threads);
    CurveFormat fmt = (opt.format == "json") ? CurveFormat::Json : CurveFormat::Csv;
    std::string payload = export_curve(curve, fmt);
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw validation_error("boundary: cannot open '" + out_file + "'");
        f << payload;
        out << "wrote " << curve.points.size() << " points to " << out_file << "\n";
    } else {
        out << payload;
    }
    return 0;
}

int cmd_search(const WeightVector& w, const std::string& direction, const std::string& method,
               int grid, const Options& opt, std::ostream& out) {
    Direction dir;
    if (direction == "max") dir = Direction::Max;
    else if (direction == "min") dir = Direction::Min;
    else throw validation_error("search: direction must be max or min");
    SearchMethod sm = (method == "certified") ? SearchMethod::Certified : SearchMethod::Grid;
    ExtremeResult res = find_extreme(w, dir, sm, grid, opt.threads);

    json j;
    j["direction"] = direction;
    j["classes_checked"] = res.classes_checked;
    j["total_optimum"] = res.total;
    j["certified"] = res.certified;
    std::string text;
    if (res.total) {
        j["winner"] = res.winner->rep;
        j["worst_margin"] = res.worst_margin;
        json ties = json::array();
        for (const auto& c : res.ties) ties.push_back(c.rep);
        j["ties"] = std::move(ties);
        text = "winner class " + class_text(*res.winner) + " (worst margin " +
               fmt17(res.worst_margin) + ", " + std::to_string(res.classes_checked) +
               " classes)\n";
    } else {
        json anti = json::array();
        for (const auto& c : res.antichain) anti.push_back(c.rep);
        j["antichain"] = std::move(anti);
        text = "no total optimum among " + std::to_string(res.classes_checked) +
               " classes; antichain size " + std::to_string(res.antichain.size()) + "\n";
    }
    emit(out, opt, j, text);
    return 0;
}

int cmd_verify(const std::optional<WeightVector>& weights, int n, int trials,
               std::uint64_t seed, int grid, const Options& opt, std::ostream& out) {
    std::optional<double> tol_env = env_tolerance();
    json runs = json::array();
    bool all_pass = true;
    double worst = 1e300;
    std::string text;

    auto one = [&](const WeightVector& w, int index) {
        ConjectureReport rep = verify_conjecture1(w, grid, opt.threads);
        bool pass = tol_env ? (rep.worst_margin >= -*tol_env) : rep.pass;
        all_pass = all_pass && pass;
        worst = std::min(worst, rep.worst_margin);
        json jr;
        jr["trial"] = index;
        jr["weights"] = w.entries();
        jr["pass"] = pass;
        jr["worst_margin"] = rep.worst_margin;
        jr["worst_class"] = rep.worst_class.rep;
        jr["classes_checked"] = rep.classes_checked;
        runs.push_back(std::move(jr));
        text += "trial " + std::to_string(index) + ": " + (pass ? "pass" : "FAIL") +
                " (worst margin " + fmt17(rep.worst_margin) + " at class " +
                class_text(rep.worst_class) + ")\n";
    };

    if (weights) {
        one(*weights, 0);
    } else {
        Xoshiro256ss rng(seed);
        for (int k = 0; k < trials; ++k)
            one(WeightVector(random_ascending_weights(rng, n)), k);
    }
    json j;
    j["pass"] = all_pass;
    j["worst_margin"] = worst;
    j["runs"] = std::move(runs);
    text += std::string(all_pass ? "PASS" : "FAIL") + " (worst margin " + fmt17(worst) + ")\n";
    emit(out, opt, j, text);
    return all_pass ? 0 : 1;
}

int cmd_extremal(const std::string& kind, int n, const std::string& w_str, double theta,
                 const Options& opt, std::ostream& out) {
    json j;
    std::string text;
    if (kind == "ngon") {
        if (w_str.empty()) throw validation_error("extremal ngon: needs --weights with product 1");
        InclusionVerdict v = regular_ngon_check(parse_weights(w_str));
        j = verdict_json(v);
        text = "n-gon vertices inside: " + verdict_name(v.kind) + " (margin " +
               fmt17(v.margin) + ")\n";
    } else if (kind == "path") {
        ExtremalReport rep = min_path_weights(n);
        j["weights"] = rep.weights.entries();
        j["lambda1"] = rep.objective;
        j["eigvec"] = *rep.eigvec;
        text = "lambda1 = " + fmt17(rep.objective) + "\n";
    } else if (kind == "frobenius") {
        ExtremalReport rep = min_frobenius_zero_product(n, theta);
        j["weights"] = rep.weights.entries();
        j["radius"] = rep.objective;
        text = "radius = " + fmt17(rep.objective) + "\n";
    } else if (kind == "double") {
        if (w_str.empty()) throw validation_error("extremal double: needs --weights (the first n-2)");
        DoubleEigenResult res = find_double_eigenvalue(parse_number_list(w_str));
        j["hat_a_nm1"] = res.hat_a_nm1;
        j["hat_a_n"] = res.hat_a_n;
        j["mu"] = res.mu;
        j["x0"] = res.x0;
        text = "hat weights = (" + fmt17(res.hat_a_nm1) + ", " + fmt17(res.hat_a_n) +
               "), doubled eigenvalue " + fmt17(res.mu) + ", x0 = " + fmt17(res.x0) + "\n";
    } else {
        throw validation_error("extremal: kind must be ngon|path|frobenius|double");
    }
    emit(out, opt, j, text);
    return 0;
}

int cmd_families(int n, const std::optional<WeightVector>& weights, const Options& opt,
                 std::ostream& out) {
    ClassTable table = enumerate_classes(n);
    json j;
    j["n"] = n;
    j["class_count"] = table.classes.size();

    if (n == 6 && weights && weights->strictly_ascending() && (*weights)[0] > 0.0) {
        auto [report, bound] = family_analysis_n6(*weights);
        json classes = json::array();
        for (std::size_t i = 0; i < table.classes.size(); ++i) {
            classes.push_back({{"class", table.classes[i].rep},
                               {"family", ClassTable::family_name(table.family_of[i])},
                               {"cyclic_sum", report.entries[i].cyclic},
                               {"product_term", report.entries[i].product_term}});
        }
        j["classes"] = std::move(classes);
        j["family_heads_dominate"] = report.family_heads_dominate;
        j["top_class"] = bound.top.rep;
        j["x0"] = bound.x0;
        j["r5_third"] = bound.r5_third;
        j["x_bounds_hold"] = bound.x_bounds_hold;
        j["min_support_sq_gap"] = bound.min_support_sq_gap;
        json heads = json::array();
        for (const auto& h : bound.heads) {
            heads.push_back({{"family", ClassTable::family_name(h.family)},
                             {"head", h.head.rep},
                             {"alpha", h.alpha},
                             {"beta", h.beta},
                             {"x", h.x}});
        }
        j["heads"] = std::move(heads);
        if (opt.format == "csv") {
            out << "class,family,cyclic_sum,product_term\n";
            for (std::size_t i = 0; i < table.classes.size(); ++i)
                out << class_text(table.classes[i]) << ","
                    << ClassTable::family_name(table.family_of[i]) << ","
                    << fmt17(report.entries[i].cyclic) << ","
                    << fmt17(report.entries[i].product_term) << "\n";
            return 0;
        }
        std::string text = std::to_string(table.classes.size()) + " classes, top " +
                           class_text(bound.top) + ", x bounds " +
                           (bound.x_bounds_hold ? "hold" : "FAIL") + ", support gap " +
                           fmt17(bound.min_support_sq_gap) + "\n";
        emit(out, opt, j, text);
        return 0;
    }

    json classes = json::array();
    for (std::size_t i = 0; i < table.classes.size(); ++i) {
        json entry;
        entry["class"] = table.classes[i].rep;
        if (n == 6) entry["family"] = ClassTable::family_name(table.family_of[i]);
        if (weights) entry["cyclic_sum"] = cyclic_sum(*weights, table.classes[i]);
        classes.push_back(std::move(entry));
    }
    j["classes"] = std::move(classes);
    if (opt.format == "csv") {
        out << "class" << (n == 6 ? ",family" : "") << (weights ? ",cyclic_sum" : "") << "\n";
        for (std::size_t i = 0; i < table.classes.size(); ++i) {
            out << class_text(table.classes[i]);
            if (n == 6) out << "," << ClassTable::family_name(table.family_of[i]);
            if (weights) out << "," << fmt17(cyclic_sum(*weights, table.classes[i]));
            out << "\n";
        }
        return 0;
    }
    emit(out, opt, j, std::to_string(table.classes.size()) + " classes for n=" +
                          std::to_string(n) + "\n");
    return 0;
}

int cmd_counterexample(const Options& opt, std::ostream& out) {
    // Same six squared weights in two arrangements; the second cannot
    // contain the first because its top polynomial root is smaller.
    WeightVector first = WeightVector::from_squares({8, 3, 30, 0, 13, 4});
    WeightVector second = WeightVector::from_squares({4, 3, 30, 0, 13, 8});
    CharPolyFamily fa = build_family(first);
    CharPolyFamily fb = build_family(second);
    double ra = largest_root(fa.f);
    double rb = largest_root(fb.f);
    InclusionVerdict v = includes_general(second, first);

    json j;
    j["first"] = {{"squared_weights", first.squares()}, {"family", family_json(fa)},
                  {"largest_root", ra}};
    j["second"] = {{"squared_weights", second.squares()}, {"family", family_json(fb)},
                   {"largest_root", rb}};
    j["second_contains_first"] = verdict_json(v);

    std::string text;
    text += "arrangement 1: f(z) = " + poly_text(fa.f) + ", largest root " + fmt17(ra) + "\n";
    text += "arrangement 2: f(z) = " + poly_text(fb.f) + ", largest root " + fmt17(rb) + "\n";
    text += "W(arrangement 1) inside W(arrangement 2): " + verdict_name(v.kind) +
            " (margin " + fmt17(v.margin) + ")\n";
    emit(out, opt, j, text);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical ranges of weighted cyclic shift matrices"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker threads (0 = all cores, 1 = serial)");

    std::string w_str, a_str, b_str, method = "auto", direction = "max", kind,
                search_method = "grid", out_file;
    int grid = 257, points = 64, n = 6, trials = 20;
    double t_val = 1.0, theta = 0.7853981633974483;
    std::uint64_t seed = 1;

    auto* c_char = app.add_subcommand("charpoly", "theta-independent polynomial family");
    c_char->add_option("--weights", w_str)->required();

    auto* c_rad = app.add_subcommand("radius", "numerical radius");
    c_rad->add_option("--weights", w_str)->required();

    auto* c_sup = app.add_subcommand("support", "largest eigenvalue of 2Re(e^{i theta} S(a))");
    c_sup->add_option("--weights", w_str)->required();
    c_sup->add_option("--t", t_val, "cos(n theta) in [-1,1]")->required();

    auto* c_inc = app.add_subcommand("include", "test W(B) inside W(A)");
    c_inc->add_option("--A", a_str)->required();
    c_inc->add_option("--B", b_str)->required();
    c_inc->add_option("--method", method)->check(CLI::IsMember({"auto", "grid", "closed"}));
    c_inc->add_option("--grid", grid);

    auto* c_bnd = app.add_subcommand("boundary", "sample the boundary curve");
    c_bnd->add_option("--weights", w_str)->required();
    c_bnd->add_option("--points", points);
    c_bnd->add_option("--out", out_file);

    int search_n = 0;
    auto* c_sea = app.add_subcommand("search", "extremal arrangement of the weights");
    c_sea->add_option("--n", search_n, "expected weight count (checked against --weights)");
    c_sea->add_option("--weights", w_str)->required();
    c_sea->add_option("--direction", direction)->check(CLI::IsMember({"max", "min"}));
    c_sea->add_option("--method", search_method)->check(CLI::IsMember({"grid", "certified"}));
    c_sea->add_option("--grid", grid);

    auto* c_ver = app.add_subcommand("verify-conjecture",
                                     "check the maximizing pattern against all classes");
    c_ver->add_option("--weights", w_str);
    c_ver->add_option("--n", n);
    c_ver->add_option("--trials", trials);
    c_ver->add_option("--seed", seed);
    c_ver->add_option("--grid", grid);

    auto* c_ext = app.add_subcommand("extremal", "extremal constructions");
    c_ext->add_option("--kind", kind)->required()
        ->check(CLI::IsMember({"ngon", "path", "frobenius", "double"}));
    c_ext->add_option("--n", n);
    c_ext->add_option("--weights", w_str);
    c_ext->add_option("--theta", theta);

    auto* c_fam = app.add_subcommand("families", "dihedral classes and cyclic sums");
    c_fam->add_option("--n", n);
    c_fam->add_option("--weights", w_str);

    auto* c_cex = app.add_subcommand("counterexample",
                                     "two arrangements with incomparable ranges");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        auto weights_opt = [&]() -> std::optional<WeightVector> {
            if (w_str.empty()) return std::nullopt;
            return parse_weights(w_str);
        };
        if (c_char->parsed()) return cmd_charpoly(parse_weights(w_str), opt, out);
        if (c_rad->parsed()) return cmd_radius(parse_weights(w_str), opt, out);
        if (c_sup->parsed()) return cmd_support(parse_weights(w_str), t_val, opt, out);
        if (c_inc->parsed())
            return cmd_include(parse_weights(a_str), parse_weights(b_str), method, grid, opt, out);
        if (c_bnd->parsed()) return cmd_boundary(parse_weights(w_str), points, out_file, opt, out);
        if (c_sea->parsed()) {
            WeightVector w = parse_weights(w_str);
            if (search_n != 0 && search_n != w.size())
                throw validation_error("search: --n disagrees with the weight count");
            return cmd_search(w, direction, search_method, grid, opt, out);
        }
        if (c_ver->parsed()) return cmd_verify(weights_opt(), n, trials, seed, grid, opt, out);
        if (c_ext->parsed()) return cmd_extremal(kind, n, w_str, theta, opt, out);
        if (c_fam->parsed()) return cmd_families(n, weights_opt(), opt, out);
        if (c_cex->parsed()) return cmd_counterexample(opt, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cyclerange::cli
