#include "eqfix/cli.hpp"

#include "eqfix/error.hpp"
#include "eqfix/hypercube.hpp"
#include "eqfix/io.hpp"
#include "eqfix/localization.hpp"
#include "eqfix/reduced_space.hpp"
#include "eqfix/restriction_solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace eqfix {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Report {
    json doc = json::object();
    std::ostringstream text;
    int code = kOk;
};

std::string join(const auto& items, const std::string& sep = " ") {
    std::ostringstream s;
    bool first = true;
    for (const auto& item : items) {
        if (!first) s << sep;
        first = false;
        s << item;
    }
    return s.str();
}

std::string weights_string(const std::vector<Weight>& w) { return "(" + join(w, ",") + ")"; }

std::vector<std::string> integer_strings(const std::vector<Integer>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

json integer_array(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(Rational(x)));
    return out;
}

json rational_array(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

void point_table(const FixedPointData& data, Report& r) {
    r.text << "fixed points (" << data.points.size() << ", n = " << data.n << ")\n";
    r.text << "  " << std::left << std::setw(12) << "id" << std::setw(7) << "index" << std::setw(24) << "weights"
           << "moment\n";
    for (const auto& p : data.sorted_points()) {
        r.text << "  " << std::setw(12) << p.id << std::setw(7) << p.index() << std::setw(24) << weights_string(p.weights)
               << (p.moment ? to_string(*p.moment) : "-") << "\n";
    }
    r.text << std::right;
}

json sorted_points_json(const FixedPointData& data) {
    json out = json::array();
    for (const auto& p : data.sorted_points()) {
        json jp;
        jp["id"] = p.id;
        jp["index"] = p.index();
        jp["weights"] = p.weights;
        if (p.moment) jp["moment"] = to_json(*p.moment);
        out.push_back(std::move(jp));
    }
    return out;
}

Report cmd_check(const std::string& file, std::optional<std::size_t> max_degree) {
    Report r;
    const InputDocument in = load_input(file);
    validate(in.data);
    const FixedPointData& data = in.data;

    std::size_t degree = data.n;
    if (max_degree) degree = *max_degree;
    else if (in.options.contains("max_degree")) {
        const auto& md = in.options.at("max_degree");
        if (!md.is_number_integer() || md.get<long long>() < 0)
            throw Error(ErrorKind::Parse, "max_degree must be a non-negative integer");
        degree = md.get<std::size_t>();
    }

    point_table(data, r);
    const CountVector N = counts(data);
    r.text << "counts: " << N.to_string() << "\n";
    r.doc["n"] = data.n;
    r.doc["points"] = sorted_points_json(data);
    r.doc["counts"] = integer_array(N.N);
    r.doc["semifree"] = data.semifree();

    bool ok = true;
    if (data.semifree()) {
        const auto rep = verify_moment_equations(data);
        r.text << "moment equations:";
        json sums = json::array();
        for (const auto& [l, s] : rep.sums) {
            r.text << " l=" << l << ":" << s.get_str();
            sums.push_back({{"l", l}, {"sum", to_json(Rational(s))}});
        }
        r.text << (rep.passed ? "  ok\n" : "  FAILED\n");
        r.doc["moment_equations"] = {{"sums", sums}, {"passed", rep.passed}};
        ok = ok && rep.passed;
    } else {
        r.text << "moment equations: skipped (not semifree)\n";
    }

    const auto cons = consistency_check(data, degree);
    const auto failures = cons.failures();
    r.text << "integrality up to degree " << degree << ": " << cons.checks.size() << " monomials, "
           << failures.size() << " failing\n";
    json checks = json::array();
    for (const auto& c : cons.checks) {
        checks.push_back({{"monomial", c.monomial_name()},
                          {"degree", c.degree},
                          {"integral", c.integral.to_string()},
                          {"passed", c.passed}});
    }
    for (const auto& c : failures) {
        r.text << "  " << c.monomial_name() << ": integral " << c.integral.to_string() << ", expected "
               << (c.degree < data.n ? "0" : "an integer polynomial") << "\n";
    }
    r.doc["consistency"] = {{"max_degree", degree}, {"checks", checks}, {"passed", cons.passed()}};
    ok = ok && cons.passed();

    r.doc["passed"] = ok;
    r.text << (ok ? "all constraints hold\n" : "constraints FAILED\n");
    r.code = ok ? kOk : kFailed;
    return r;
}

Report cmd_count(std::size_t n, const std::string& n0_text) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    const Rational n0 = parse_rational(n0_text);
    if (!is_integer(n0) || n0 < 0) throw Error(ErrorKind::InvalidArgument, "N0 must be a non-negative integer");
    Report r;
    const CountVector N = predict_counts(n, n0.get_num());
    r.text << "k  N_k\n";
    for (std::size_t k = 0; k < N.N.size(); ++k) r.text << k << "  " << N.N[k].get_str() << "\n";
    r.text << "counts: " << N.to_string() << "\n";
    r.doc["n"] = n;
    r.doc["N0"] = to_json(n0);
    r.doc["counts"] = integer_array(N.N);
    return r;
}

Report cmd_ring(std::size_t n) {
    if (n == 0 || n > 10) throw Error(ErrorKind::InvalidArgument, "ring needs 1 <= n <= 10");
    Report r;
    r.doc = ring_document(n);
    const auto& basis = r.doc.at("basis");
    const auto& points = r.doc.at("points");
    r.text << "basis (" << basis.size() << " alpha classes)\n";
    for (const auto& b : basis) {
        const Subset J = Subset::parse(b.at("subset").get<std::string>());
        r.text << "  alpha" << J.to_string() << " = " << alpha_class(J).to_string() << "\n";
    }
    r.text << "relations: " << join(IdealPresentation{n, {}, {}}.ring_relations(), ", ") << "\n";
    r.text << "restriction matrix (rows: basis, columns: fixed points by (index, id))\n";
    std::size_t width = 8;
    for (const auto& p : points) width = std::max(width, p.at("id").get<std::string>().size() + 2);
    r.text << std::setw(static_cast<int>(width)) << "";
    for (const auto& p : points) r.text << std::setw(static_cast<int>(width)) << p.at("id").get<std::string>();
    r.text << "\n";
    const auto& matrix = r.doc.at("matrix");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        r.text << std::setw(static_cast<int>(width)) << basis[i].at("subset").get<std::string>();
        for (std::size_t p = 0; p < points.size(); ++p)
            r.text << std::setw(static_cast<int>(width)) << unipoly_from_json(matrix[i][p]).to_string();
        r.text << "\n";
    }
    r.text << "chern series prod(1 + t(2a_i - y))\n";
    json chern = json::array();
    const auto series = equivariant_chern_series(n, n);
    for (std::size_t i = 0; i < series.size(); ++i) {
        r.text << "  c" << i + 1 << " = " << series[i].to_string() << "\n";
        chern.push_back({{"class", "c" + std::to_string(i + 1)}, {"value", to_json(series[i])}});
    }
    r.doc["chern_series"] = std::move(chern);
    const auto inj = injectivity_rank_check(n);
    r.text << "injectivity ranks:";
    json ranks = json::array();
    for (const auto& d : inj.degrees) {
        r.text << " " << 2 * d.degree << ":" << d.rank << "/" << d.rows;
        ranks.push_back({{"degree", 2 * d.degree}, {"rows", d.rows}, {"cols", d.cols}, {"rank", d.rank}});
    }
    r.text << (inj.passed() ? "  ok\n" : "  FAILED\n");
    r.doc["injectivity"] = {{"degrees", ranks}, {"passed", inj.passed()}};
    r.code = inj.passed() ? kOk : kFailed;
    return r;
}

json deduction_json(const LevelDeduction& d) {
    json known = d.known_levels;
    return {{"label", d.label}, {"class_degree", d.class_degree}, {"known_levels", known},
            {"level_sums", rational_array(d.level_sums)}};
}

void deduction_text(const LevelDeduction& d, Report& r) {
    r.text << "  " << std::left << std::setw(14) << d.label << std::right << " known {" << join(d.known_levels, ",")
           << "}  sums by level: " << join(rational_strings(d.level_sums)) << "\n";
}

Report cmd_solve(const std::string& file) {
    Report r;
    const InputDocument in = load_input(file);
    validate(in.data);
    const PipelineCertificate cert = run_pipeline(in.data, in.table);

    r.text << "n = " << cert.n << ", counts: " << cert.counts.to_string() << "\n";
    r.text << "level sums\n";
    deduction_text(cert.generator_sums, r);
    deduction_text(cert.square_sums, r);
    for (const auto& d : cert.lower_class_sums) deduction_text(d, r);
    for (const auto& d : cert.product_sums) deduction_text(d, r);
    r.text << "value multisets by level:";
    for (std::size_t k = 0; k < cert.value_multisets.size(); ++k)
        r.text << " [" << join(integer_strings(cert.value_multisets[k]), ",") << "]";
    r.text << "\n";
    r.text << "comparison levels by k: " << join(cert.comparison_levels) << "\n";

    r.text << "restriction table (" << (cert.table_supplied ? "supplied" : "forced") << ")\n";
    r.text << "  " << std::left << std::setw(12) << "id" << std::setw(4) << "k";
    for (std::size_t j = 1; j <= cert.n; ++j) r.text << std::setw(6) << ("a" + std::to_string(j));
    r.text << "subset\n";
    json rows = json::array();
    for (std::size_t p = 0; p < cert.table.point_ids.size(); ++p) {
        const std::string& id = cert.table.point_ids[p];
        r.text << "  " << std::setw(12) << id << std::setw(4) << cert.table.levels[p];
        json entries = json::array();
        for (std::size_t j = 0; j < cert.n; ++j) {
            r.text << std::setw(6) << cert.table.entries[j][p].to_string();
            entries.push_back(to_json(cert.table.entries[j][p]));
        }
        const auto b = cert.bijection.find(id);
        const std::string subset = b == cert.bijection.end() ? "-" : b->second.to_string();
        r.text << subset << "\n";
        rows.push_back({{"id", id}, {"k", cert.table.levels[p]}, {"restrictions", entries}, {"subset", subset}});
    }
    r.text << std::right;
    r.text << "model agreement: " << (cert.model_agreement ? "yes" : "NO") << "\n";

    json multisets = json::array();
    for (const auto& m : cert.value_multisets) multisets.push_back(integer_array(m));
    json lower = json::array(), products = json::array();
    for (const auto& d : cert.lower_class_sums) lower.push_back(deduction_json(d));
    for (const auto& d : cert.product_sums) products.push_back(deduction_json(d));
    r.doc = {{"n", cert.n},
             {"counts", integer_array(cert.counts.N)},
             {"generator_sums", deduction_json(cert.generator_sums)},
             {"square_sums", deduction_json(cert.square_sums)},
             {"value_multisets", multisets},
             {"lower_class_sums", lower},
             {"product_sums", products},
             {"comparison_levels", cert.comparison_levels},
             {"table_supplied", cert.table_supplied},
             {"table", rows},
             {"model_agreement", cert.model_agreement}};
    r.code = cert.model_agreement ? kOk : kFailed;
    return r;
}

void quotient_report(const IdealPresentation& pres, std::size_t max_degree, const std::vector<std::size_t>& counted,
                     Report& r, bool& ok) {
    const GradedQuotient q = graded_quotient(pres, max_degree);
    r.text << "kernel generators: " << pres.positive_generators.size() << " alpha, "
           << pres.negative_generators.size() << " beta\n";
    json gens = json::array();
    for (const auto& [J, g] : pres.positive_generators)
        gens.push_back({{"kind", "alpha"}, {"subset", J.to_string()}, {"class", to_json(g)}});
    for (const auto& [J, g] : pres.negative_generators)
        gens.push_back({{"kind", "beta"}, {"subset", J.to_string()}, {"class", to_json(g)}});

    r.text << "degree  monomials  relations  rank  torsion\n";
    json pieces = json::array();
    for (const auto& p : q.pieces) {
        r.text << std::setw(6) << 2 * p.degree << std::setw(11) << p.monomials.size() << std::setw(11)
               << p.relation_rows << std::setw(6) << p.rank << "  "
               << (p.torsion.empty() ? "-" : join(integer_strings(p.torsion), ",")) << "\n";
        pieces.push_back({{"degree", 2 * p.degree},
                          {"monomials", p.monomials.size()},
                          {"relations", p.relation_rows},
                          {"rank", p.rank},
                          {"torsion", integer_array(p.torsion)}});
    }
    r.text << "Betti: " << join(q.ranks()) << "\n";
    r.text << "Betti by counting: " << join(counted) << "\n";
    const bool covered = q.pieces.size() >= counted.size();
    bool agree = true;
    for (std::size_t i = 0; i < counted.size() && i < q.pieces.size(); ++i) agree = agree && counted[i] == q.pieces[i].rank;
    if (!agree) r.text << "ranks DISAGREE with counting\n";
    ok = ok && agree;

    json poincare = nullptr;
    if (covered) {
        const auto rep = poincare_check(q, pres.n);
        r.text << "Poincare duality: " << (rep.passed ? "ok" : "FAILED") << "\n";
        for (const auto& p : rep.problems) r.text << "  " << p << "\n";
        poincare = {{"passed", rep.passed}, {"problems", rep.problems}};
        ok = ok && rep.passed;
    }

    json chern = json::array();
    const std::size_t top = std::min(pres.n - 1, max_degree / 2);
    const auto series = reduced_chern_series(pres, top);
    for (std::size_t i = 0; i < series.size(); ++i) {
        r.text << "c" << i + 1 << " = " << series[i].to_string() << "\n";
        chern.push_back({{"class", "c" + std::to_string(i + 1)}, {"reduced", series[i].to_string()}});
    }

    r.doc["generators"] = gens;
    r.doc["pieces"] = pieces;
    r.doc["betti"] = q.ranks();
    r.doc["betti_by_counting"] = counted;
    r.doc["torsion_free"] = q.torsion_free();
    r.doc["poincare"] = poincare;
    r.doc["chern_classes"] = chern;
}

std::vector<std::size_t> counted_betti(const FixedPointData& data) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 <= data.n; ++i) out.push_back(betti_by_counting(data, i));
    return out;
}

Report cmd_reduce(const std::string& file, std::optional<std::size_t> n_opt, const std::string& c_text,
                  std::optional<std::size_t> max_degree_opt) {
    Report r;
    bool ok = true;
    if (!file.empty()) {
        if (n_opt || !c_text.empty()) throw Error(ErrorKind::InvalidArgument, "give either FILE or --n/--c, not both");
        const InputDocument in = load_input(file);
        validate(in.data);
        const FixedPointData& data = in.data;
        point_table(data, r);
        const auto counted = counted_betti(data);
        r.doc["n"] = data.n;

        // The quotient needs the subset labels of the cube model.
        std::map<Subset, Rational> moments;
        bool labelled = data.n <= 20 && data.points.size() == (std::size_t{1} << data.n);
        for (const auto& p : data.points) {
            if (!labelled) break;
            try {
                const Subset J = Subset::parse(p.id);
                labelled = J.is_subset_of(Subset::full(data.n)) && p.moment && moments.emplace(J, *p.moment).second;
            } catch (const Error&) {
                labelled = false;
            }
        }
        if (labelled) {
            const std::size_t max_degree = max_degree_opt.value_or(2 * (data.n - 1));
            quotient_report(kernel_generators(data.n, moments), max_degree, counted, r, ok);
        } else {
            r.text << "Betti by counting: " << join(counted) << "\n";
            r.text << "(point ids are not cube subsets; quotient skipped)\n";
            r.doc["betti_by_counting"] = counted;
        }
    } else {
        if (!n_opt) throw Error(ErrorKind::InvalidArgument, "reduce needs FILE or --n");
        const std::size_t n = *n_opt;
        if (n == 0 || n > 10) throw Error(ErrorKind::InvalidArgument, "reduce needs 1 <= n <= 10");
        const ModelData model{n, c_text.empty() ? default_offset(n) : parse_rational(c_text)};
        r.text << "(P^1)^" << n << " with mu(J) = |J| - " << to_string(model.offset) << "\n";
        r.doc["n"] = n;
        r.doc["c"] = to_json(model.offset);
        const auto counted = counted_betti(hypercube_data(n, model));
        const std::size_t max_degree = max_degree_opt.value_or(2 * (n - 1));
        quotient_report(kernel_generators(model), max_degree, counted, r, ok);
    }
    r.doc["passed"] = ok;
    r.code = ok ? kOk : kFailed;
    return r;
}

Report cmd_search(std::size_t n, std::size_t points, std::size_t bound, std::size_t degree,
                  std::uint64_t max_candidates, unsigned threads) {
    Report r;
    SearchOptions opts;
    opts.max_candidates = max_candidates;
    opts.threads = threads;
    const SearchResult res = search_candidates(n, points, bound, degree, opts);
    r.text << "examined " << res.examined << " configurations, " << res.passing.size() << " pass up to degree "
           << degree << "\n";
    json found = json::array();
    for (const auto& config : res.passing) {
        std::vector<std::string> parts;
        for (const auto& w : config) parts.push_back(weights_string(w));
        r.text << "  " << join(parts, " / ") << "\n";
        found.push_back(config);
    }
    r.doc = {{"n", n},      {"points", points},       {"bound", bound},
             {"degree", degree}, {"examined", res.examined}, {"passing", found}};
    return r;
}

}  // namespace

json ring_document(std::size_t n) {
    const FixedPointData data = hypercube_data(n);
    json doc;
    doc["n"] = n;
    json points = json::array();
    std::vector<Subset> at;
    for (const auto& p : data.sorted_points()) {
        points.push_back({{"id", p.id}, {"index", p.index()}, {"weights", p.weights}});
        at.push_back(Subset::parse(p.id));
    }
    json basis = json::array();
    json matrix = json::array();
    for (Subset J : all_subsets(n)) {
        const CubeClass a = alpha_class(J);
        basis.push_back({{"subset", J.to_string()}, {"class", to_json(a)}});
        json row = json::array();
        for (Subset F : at) row.push_back(to_json(restrict_class(a, F)));
        matrix.push_back(std::move(row));
    }
    doc["points"] = std::move(points);
    doc["basis"] = std::move(basis);
    doc["matrix"] = std::move(matrix);
    return doc;
}

bool ring_document_roundtrip(const json& doc) {
    const auto& points = doc.at("points");
    const auto& basis = doc.at("basis");
    const auto& matrix = doc.at("matrix");
    if (matrix.size() != basis.size()) return false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const CubeClass cls = cubeclass_from_json(basis[i].at("class"));
        if (matrix[i].size() != points.size()) return false;
        for (std::size_t p = 0; p < points.size(); ++p) {
            const Subset F = Subset::parse(points[p].at("id").get<std::string>());
            if (restrict_class(cls, F) != unipoly_from_json(matrix[i][p])) return false;
        }
    }
    return true;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constraints on isolated fixed points of Hamiltonian circle actions", "eqfix"};
    app.require_subcommand(1);
    std::string format = "text";
    std::string output;
    app.add_option("--format", format, "text or structured (JSON)")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--output", output, "write the report to this file");

    std::string file;
    std::optional<std::size_t> n_opt, max_degree;
    std::size_t n = 0, points = 0, bound = 0, degree = 0;
    std::string n0 = "1", c_text;
    std::uint64_t max_candidates = SearchOptions{}.max_candidates;
    unsigned threads = 1;

    auto* check = app.add_subcommand("check", "validate data and run the localization constraints");
    check->add_option("file", file, "input document")->required();
    check->add_option("--max-degree", max_degree, "largest Chern monomial degree");

    auto* count = app.add_subcommand("count", "fixed point counts by index");
    count->add_option("--n", n)->required();
    count->add_option("--N0", n0, "number of index-0 points")->capture_default_str();

    auto* ring = app.add_subcommand("ring", "alpha basis of the cube and its restriction matrix");
    ring->add_option("n,--n", n)->required();

    auto* solve = app.add_subcommand("solve", "deduce the restriction table from fixed point data");
    solve->add_option("file", file, "input document")->required();

    auto* reduce = app.add_subcommand("reduce", "cohomology of the reduced space");
    reduce->add_option("file", file, "input document with moment values");
    reduce->add_option("--n", n_opt);
    reduce->add_option("--c", c_text, "offset in mu(J) = |J| - c");
    reduce->add_option("--max-degree", max_degree, "largest cohomological degree");

    auto* search = app.add_subcommand("search", "enumerate weight configurations passing the constraints");
    search->add_option("--n", n)->required();
    search->add_option("--points", points)->required();
    search->add_option("--bound", bound)->required();
    search->add_option("--degree", degree)->required();
    search->add_option("--max-candidates", max_candidates)->capture_default_str();
    search->add_option("--threads", threads)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    Report report;
    try {
        if (check->parsed()) report = cmd_check(file, max_degree);
        else if (count->parsed()) report = cmd_count(n, n0);
        else if (ring->parsed()) report = cmd_ring(n);
        else if (solve->parsed()) report = cmd_solve(file);
        else if (reduce->parsed()) report = cmd_reduce(file, n_opt, c_text, max_degree);
        else report = cmd_search(n, points, bound, degree, max_candidates, threads);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_input_error(e.kind()) ? kBadInput : kFailed;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    const std::string body = format == "structured" ? report.doc.dump(2) + "\n" : report.text.str();
    if (output.empty()) {
        out << body;
    } else {
        std::ofstream f(output);
        if (!f) {
            err << "error: cannot write '" << output << "'\n";
            return kBadInput;
        }
        f << body;
    }
    return report.code;
}

}  // namespace eqfix
