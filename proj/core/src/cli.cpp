#include "sylvester/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sylvester/intmatrix.hpp"
#include "sylvester/json_io.hpp"
#include "sylvester/poly_families.hpp"
#include "sylvester/scalar_partition.hpp"
#include "sylvester/vector_partition.hpp"

namespace sylvester {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    out.push_back(current);
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    for (const std::string& part : split(text, ',')) {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(part, &pos);
        if (pos != part.find_last_not_of(" \t") + 1 && pos < part.size())
            throw std::invalid_argument("invalid integer list: '" + text + "'");
        out.push_back(v);
    }
    return out;
}

Exponents parse_index(const std::string& text) {
    Exponents out;
    for (std::int64_t v : parse_int_list(text)) {
        if (v < 0) throw std::invalid_argument("index components must be nonnegative");
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

IntMatrix parse_matrix(const std::string& text) {
    const std::vector<std::string> rows = split(text, ';');
    std::vector<std::vector<std::int64_t>> parsed;
    for (const std::string& row : rows) parsed.push_back(parse_int_list(row));
    const int cols = static_cast<int>(parsed.front().size());
    IntMatrix m(static_cast<int>(parsed.size()), cols);
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(parsed[r].size()) != cols)
            throw std::invalid_argument("matrix rows must have equal length");
        for (int c = 0; c < cols; ++c) m.at(r, c) = parsed[r][c];
    }
    return m;
}

std::vector<GaussianRational> parse_alpha(const std::string& text) {
    std::vector<GaussianRational> out;
    for (const std::string& part : split(text, ',')) out.push_back(GaussianRational::parse(part));
    return out;
}

std::vector<BigRational> parse_rational_list(const std::string& text) {
    std::vector<BigRational> out;
    for (const std::string& part : split(text, ',')) out.push_back(BigRational::parse(part));
    return out;
}

struct GlobalFlags {
    bool json = false;
    bool verify = false;
    std::int64_t max_s = 50;
    std::int64_t grid = 12;
};

int cmd_poly(const GlobalFlags& flags, const std::string& family, std::optional<std::int64_t> k,
             const std::string& n_text, const std::string& d_text, const std::string& matrix_text,
             const std::string& rho_text, std::int64_t cap, std::ostream& out) {
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw CLI::ValidationError("poly " + family + " requires " + what);
    };
    auto rho_for = [&](std::size_t m) {
        std::vector<BigRational> rhos = parse_rational_list(rho_text);
        if (rhos.size() == 1 && m > 1) rhos.assign(m, rhos[0]);
        if (rhos.size() != m) throw std::invalid_argument("need one rho per generating factor");
        return rhos;
    };
    const auto cap_override = static_cast<unsigned>(cap < 0 ? 0 : cap);

    MultiPoly result(1);
    if (family == "bernoulli") {
        need(k.has_value(), "--k");
        result = bernoulli_poly(static_cast<unsigned>(*k));
    } else if (family == "eulerian") {
        need(k.has_value(), "--k");
        need(!rho_text.empty(), "--rho");
        result = eulerian_poly(static_cast<unsigned>(*k), BigRational::parse(rho_text));
    } else if (family == "higher-bernoulli") {
        need(k.has_value(), "--k");
        need(!d_text.empty(), "--d");
        result = higher_order_bernoulli(static_cast<unsigned>(*k), {parse_int_list(d_text)});
    } else if (family == "higher-eulerian") {
        need(k.has_value(), "--k");
        need(!d_text.empty(), "--d");
        need(!rho_text.empty(), "--rho");
        const HigherOrderSpec spec{parse_int_list(d_text)};
        result = higher_order_eulerian(static_cast<unsigned>(*k), rho_for(spec.d.size()), spec);
    } else if (family == "vector-bernoulli") {
        need(!n_text.empty(), "--n");
        const Exponents n = parse_index(n_text);
        if (matrix_text.empty()) {
            result = vector_bernoulli(n, static_cast<int>(n.size()));
        } else {
            result = vector_higher_order_bernoulli(n, {parse_matrix(matrix_text)}, cap_override);
        }
    } else if (family == "vector-eulerian") {
        need(!n_text.empty(), "--n");
        need(!rho_text.empty(), "--rho");
        const Exponents n = parse_index(n_text);
        IntMatrix D;
        if (matrix_text.empty()) {
            D = IntMatrix(static_cast<int>(n.size()), 1);
            for (int r = 0; r < D.rows; ++r) D.at(r, 0) = 1;
        } else {
            D = parse_matrix(matrix_text);
        }
        result = vector_higher_order_eulerian(n, rho_for(D.cols), {D}, cap_override);
    } else {
        throw CLI::ValidationError("unknown polynomial family '" + family + "'");
    }

    out << (flags.json ? to_json(result) : result.str()) << "\n";
    return 0;
}

int cmd_scalar(const GlobalFlags& flags, const std::string& parts_text,
               std::optional<std::int64_t> s, std::ostream& out, std::ostream& err) {
    const PartList parts{parse_int_list(parts_text)};
    validate_parts(parts);
    const QuasiPoly1D quasi = partition_quasipoly(parts);

    if (s) {
        if (*s < 0) throw std::invalid_argument("s must be nonnegative");
        const BigRational value = evaluate_quasipoly(quasi, *s);
        out << value.str() << "\n";
    }
    if (flags.verify) {
        const std::int64_t bound = flags.max_s;
        for (std::int64_t t = 0; t <= bound; ++t) {
            const BigRational value = evaluate_quasipoly(quasi, t);
            const std::uint64_t oracle = brute_count(t, parts);
            if (!value.is_integer() || value != BigRational(mpz_class(static_cast<unsigned long>(oracle)), 1)) {
                err << "mismatch at s=" << t << ": quasipolynomial " << value.str()
                    << " vs enumeration " << oracle << "\n";
                return 1;
            }
        }
        out << "OK " << bound + 1 << "/" << bound + 1 << "\n";
        return 0;
    }
    if (!s) out << to_json(quasi) << "\n";
    return 0;
}

int cmd_vector(const GlobalFlags& flags, const std::string& matrix_text,
               const std::string& s_text, const std::string& alpha_text, bool limit,
               const std::string& limit_dir_text, std::ostream& out, std::ostream& err) {
    const MatrixSpec spec = MatrixSpec::validate(parse_matrix(matrix_text));
    const VectorWaveDecomposition decomp = decompose(spec);

    EvalOptions opts;
    opts.projective_limit = limit;
    if (!limit_dir_text.empty()) opts.direction = parse_rational_list(limit_dir_text);

    std::vector<GaussianRational> alpha;
    if (!alpha_text.empty()) alpha = parse_alpha(alpha_text);

    if (s_text.empty()) {
        if (flags.verify) {
            if (alpha.empty()) throw std::invalid_argument("grid verification requires --alpha");
            // Compare against enumeration on the grid 0 <= s_k <= grid; only
            // meaningful when alpha's chamber covers the whole grid.
            std::vector<std::int64_t> s(spec.rows(), 0);
            std::uint64_t checked = 0;
            while (true) {
                const BigRational value = evaluate_real(decomp, s, alpha, opts);
                const std::uint64_t oracle = brute_vector_count(s, spec);
                if (!value.is_integer() ||
                    value != BigRational(mpz_class(static_cast<unsigned long>(oracle)), 1)) {
                    err << "mismatch at s=(";
                    for (std::size_t i = 0; i < s.size(); ++i) err << (i ? "," : "") << s[i];
                    err << "): wave value " << value.str() << " vs enumeration " << oracle << "\n";
                    return 1;
                }
                ++checked;
                int k = spec.rows();
                while (k > 0 && s[k - 1] == flags.grid) s[--k] = 0;
                if (k == 0) break;
                ++s[k - 1];
            }
            out << "OK " << checked << "/" << checked << "\n";
            return 0;
        }
        out << to_json(decomp) << "\n";
        return 0;
    }

    const std::vector<std::int64_t> s = parse_int_list(s_text);
    if (alpha.empty()) throw std::invalid_argument("evaluation requires --alpha");
    const GaussianRational value = evaluate(decomp, s, alpha, opts);

    std::optional<std::uint64_t> brute;
    if (flags.verify) {
        for (std::int64_t v : s) {
            if (v < 0) throw std::invalid_argument("verification requires a nonnegative s");
        }
        brute = brute_vector_count(s, spec);
    }
    out << evaluation_report_json(s, alpha, value, brute) << "\n";
    if (brute &&
        (!value.real().is_integer() ||
         value.real() != BigRational(mpz_class(static_cast<unsigned long>(*brute)), 1))) {
        err << "mismatch: real part " << value.real().str() << " vs enumeration " << *brute
            << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Exact restricted and vector partition functions as quasipolynomials "
        "(Sylvester waves over Bernoulli polynomials of higher order)"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "JSON output where text is the default");
    app.add_flag("--verify", flags.verify, "cross-check results against direct enumeration");
    app.add_option("--max-s", flags.max_s, "verification bound for scalar counts")
        ->default_val(50);
    app.add_option("--grid", flags.grid, "per-coordinate verification bound for vector counts")
        ->default_val(12);

    std::string family, n_text, d_text, matrix_text, rho_text, parts_text, s_text, alpha_text,
        limit_dir_text;
    std::optional<std::int64_t> k_opt, s_opt;
    std::int64_t k_value = 0, s_value = 0, cap = -1;
    bool limit = false;

    CLI::App* poly = app.add_subcommand("poly", "print one polynomial family member");
    poly->add_option("family", family,
                     "bernoulli | eulerian | higher-bernoulli | higher-eulerian | "
                     "vector-bernoulli | vector-eulerian")
        ->required();
    auto* k_option = poly->add_option("--k", k_value, "polynomial degree index");
    poly->add_option("--n", n_text, "vector index, e.g. 1,0");
    poly->add_option("--d", d_text, "higher-order parameters, e.g. 1,2,3");
    poly->add_option("--matrix", matrix_text, "parameter matrix, e.g. \"1,2,0;1,0,1\"");
    poly->add_option("--rho", rho_text, "Eulerian parameter(s), e.g. -1 or -1,-1");
    poly->add_option("--cap", cap, "series truncation override (>= |n|)");

    CLI::App* scalar = app.add_subcommand("scalar", "restricted partition function");
    scalar->add_option("--parts", parts_text, "part list, e.g. 1,2,3")->required();
    auto* s_scalar_option = scalar->add_option("--s", s_value, "evaluation point");

    CLI::App* vector_cmd = app.add_subcommand("vector", "vector partition function");
    vector_cmd->add_option("--matrix", matrix_text, "matrix, e.g. \"1,2,0;1,0,1\"")->required();
    vector_cmd->add_option("--s", s_text, "evaluation point, e.g. 3,5");
    vector_cmd->add_option("--alpha", alpha_text,
                           "chamber vector; components \"re\" or \"re+im i\", e.g. \"1,-1+1i\"");
    vector_cmd->add_flag("--limit", limit,
                         "projective-limit evaluation when alpha lies on the zero set of P_m");
    vector_cmd->add_option("--limit-dir", limit_dir_text,
                           "perturbation direction for --limit (default all ones)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (poly->parsed()) {
            if (k_option->count() > 0) k_opt = k_value;
            return cmd_poly(flags, family, k_opt, n_text, d_text, matrix_text, rho_text, cap, out);
        }
        if (scalar->parsed()) {
            if (s_scalar_option->count() > 0) s_opt = s_value;
            return cmd_scalar(flags, parts_text, s_opt, out, err);
        }
        return cmd_vector(flags, matrix_text, s_text, alpha_text, limit, limit_dir_text, out, err);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace sylvester
