// Command-line front end: dimension tables, basis listings, cocycle
// classification, primitives, the verification suite and structure-constant
// ingestion.  Exit codes: 0 success, 1 check/verification failure, 2 usage
// or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bookcoh/cohomology.hpp"
#include "bookcoh/text.hpp"
#include "bookcoh/verify.hpp"

namespace {

using nlohmann::json;
using namespace bookcoh;

std::string read_input(const std::string& file) {
    if (file.empty() || file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(file);
    if (!in)
        throw std::runtime_error("cannot open file '" + file + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json table_to_json(const DimensionTable& table) {
    json slices = json::array();
    for (const auto& [kd, dim] : table.by_slice)
        slices.push_back({{"k", kd.first}, {"d", kd.second}, {"dim", dim}});
    return json{{"n", table.n},
                {"formal", table.formal},
                {"slices", slices},
                {"totals", table.totals}};
}

void print_table(const DimensionTable& table, std::ostream& os) {
    if (table.formal)
        os << "polynomial (formal) cohomology of the given linear structure\n";
    os << "per-slice dimensions (k = multivector degree, d = coefficient degree):\n";
    int kmax = static_cast<int>(table.totals.size()) - 1;
    for (int k = 0; k <= kmax; ++k) {
        os << "  k=" << k << ":";
        for (const auto& [kd, dim] : table.by_slice)
            if (kd.first == k && dim != 0)
                os << "  (d=" << kd.second << ") " << dim;
        os << "\n";
    }
    os << "totals:";
    for (int v : table.totals)
        os << " " << v;
    os << "\n";
}

LinearPoisson structure_from_json(const std::string& text) {
    json doc = json::parse(text);
    if (!doc.contains("dim") || !doc.contains("c"))
        throw std::runtime_error("structure file needs fields \"dim\" and \"c\"");
    int n = doc.at("dim").get<int>();
    std::vector<StructureConstant> entries;
    for (const auto& row : doc.at("c")) {
        if (!row.is_array() || row.size() != 4)
            throw std::runtime_error("each entry of \"c\" must be [a, b, k, value]");
        Rational value = row[3].is_string() ? Rational::parse(row[3].get<std::string>())
                                            : Rational(row[3].get<long>());
        entries.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), value});
    }
    return from_structure_constants(n, entries);
}

int run_dims(int n, std::optional<int> dmax, const std::string& json_file) {
    DimensionTable table = cohomology_dims(n, n, dmax);
    print_table(table, std::cout);
    if (!json_file.empty()) {
        std::ofstream out(json_file);
        if (!out)
            throw std::runtime_error("cannot open '" + json_file + "' for writing");
        out << table_to_json(table).dump(2) << "\n";
    }
    return 0;
}

int run_basis(int n, int k) {
    for (const PolyMultivector& b : basis_cocycles(n, k))
        std::cout << format_multivector(b) << "\n";
    return 0;
}

int run_classify(int n, const std::string& t0_text, const std::string& file) {
    Rational t0 = Rational::parse(t0_text);
    PolyMultivector mu = parse_multivector(read_input(file), n);
    if (!is_cocycle(mu)) {
        std::cerr << "error: input is not a cocycle\n";
        return 1;
    }
    CohomologyClass cls = classify(mu, t0);
    std::cout << "class in H^" << cls.degree() << " (n=" << n << "):\n";
    if (cls.is_zero()) {
        std::cout << "  0\n";
        return 0;
    }
    for (const auto& [p, c] : cls.dt_coords()) {
        CohomologyClass unit(n, cls.degree());
        unit.add_dt(p, 1);
        std::cout << "  " << format_multivector(unit.representative()) << ": " << c.str()
                  << "\n";
    }
    for (const auto& [p, c] : cls.plain_coords()) {
        CohomologyClass unit(n, cls.degree());
        unit.add_plain(p, 1);
        std::cout << "  " << format_multivector(unit.representative()) << ": " << c.str()
                  << "\n";
    }
    return 0;
}

int run_primitive(int n, const std::string& file) {
    PolyMultivector mu = parse_multivector(read_input(file), n);
    if (!is_cocycle(mu)) {
        std::cerr << "error: input is not a cocycle\n";
        return 1;
    }
    auto zeta = find_primitive(mu);
    if (!zeta) {
        std::cout << "NOT_EXACT\n";
        return 0;
    }
    std::cout << format_multivector(*zeta) << "\n";
    return 0;
}

int run_verify(int n, std::uint64_t seed, int trials) {
    auto results = run_verification({n, seed, trials});
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.pass)
            std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << " (n=" << n
              << ", seed=" << seed << ", trials=" << trials << ")\n";
    return all ? 0 : 1;
}

int run_lie(const std::string& file, std::optional<int> dmax) {
    LinearPoisson structure = structure_from_json(read_input(file));
    if (!jacobi_holds(structure)) {
        std::cerr << "error: structure constants do not satisfy the Jacobi identity\n";
        return 1;
    }
    int n = structure.ambient_dim();
    DimensionTable table = cohomology_dims(n, n, dmax, &structure);
    print_table(table, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Poisson cohomology of book-type linear structures on R^n"};
    app.require_subcommand(1);

    int n = 3;
    int k = 1;
    std::optional<int> dmax;
    std::string file;
    std::string json_file;
    std::string t0 = "0";
    std::uint64_t seed = 1;
    int trials = 200;

    auto* dims = app.add_subcommand("dims", "Cohomology dimension table for the book structure");
    dims->add_option("--n", n, "ambient dimension")->required()->check(CLI::Range(2, 16));
    dims->add_option("--dmax", dmax, "coefficient-degree cutoff (default: k+3 per degree)");
    dims->add_option("--json", json_file, "write the table as JSON to this file");

    auto* basis = app.add_subcommand("basis", "Admissible cocycle representatives of H^k");
    basis->add_option("--n", n, "ambient dimension")->required()->check(CLI::Range(2, 16));
    basis->add_option("--k", k, "cohomology degree")->required()->check(CLI::Range(0, 16));

    auto* classify_cmd = app.add_subcommand("classify", "Coordinates of a cocycle in the admissible basis");
    classify_cmd->add_option("--n", n, "ambient dimension")->required()->check(CLI::Range(2, 16));
    classify_cmd->add_option("--t0", t0, "evaluation point (rational)");
    classify_cmd->add_option("--file", file, "multivector file ('-' or absent: stdin)");

    auto* primitive = app.add_subcommand("primitive", "Primitive of an exact cocycle, or NOT_EXACT");
    primitive->add_option("--n", n, "ambient dimension")->required()->check(CLI::Range(2, 16));
    primitive->add_option("--file", file, "multivector file ('-' or absent: stdin)");

    auto* verify = app.add_subcommand("verify", "Run every invariant suite for one dimension");
    verify->add_option("--n", n, "ambient dimension")->required()->check(CLI::Range(2, 16));
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--trials", trials, "randomized trials per check")
        ->check(CLI::PositiveNumber);

    auto* lie = app.add_subcommand("lie", "Formal cohomology table for general structure constants");
    lie->add_option("--json", file, "JSON file with {\"dim\": n, \"c\": [[a,b,k,\"p/q\"],...]}")
        ->required();
    lie->add_option("--dmax", dmax, "coefficient-degree cutoff (default: k+3 per degree)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dims->parsed())
            return run_dims(n, dmax, json_file);
        if (basis->parsed())
            return run_basis(n, k);
        if (classify_cmd->parsed())
            return run_classify(n, t0, file);
        if (primitive->parsed())
            return run_primitive(n, file);
        if (verify->parsed())
            return run_verify(n, seed, trials);
        if (lie->parsed())
            return run_lie(file, dmax);
    } catch (const ParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
