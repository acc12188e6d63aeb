// pefo: evaluate and classify positive equality-free first-order sentences
// over fixed finite relational structures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pefo/classify.hpp"
#include "pefo/evaluate.hpp"
#include "pefo/fixtures.hpp"
#include "pefo/formula_parser.hpp"
#include "pefo/lattice.hpp"
#include "pefo/qe.hpp"
#include "pefo/random.hpp"
#include "pefo/shape.hpp"
#include "pefo/theta.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A structure argument is a file path, "-" for stdin, or an inline fixture
// reference fixture:<name>[:p1,p2,...].
pefo::Structure load_structure(const std::string& spec) {
    if (spec.rfind("fixture:", 0) == 0) {
        std::string rest = spec.substr(8);
        std::string name = rest;
        std::vector<int> params;
        if (auto colon = rest.find(':'); colon != std::string::npos) {
            name = rest.substr(0, colon);
            std::stringstream ss(rest.substr(colon + 1));
            std::string item;
            while (std::getline(ss, item, ','))
                params.push_back(std::stoi(item));
        }
        return pefo::fixture(name, params);
    }
    if (spec == "-") return pefo::parse_structure(read_stream(std::cin));
    std::ifstream in(spec);
    if (!in) throw pefo::ValidationError("cannot open structure file: " + spec);
    return pefo::parse_structure(read_stream(in));
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw pefo::ValidationError("cannot open output file: " + path);
    out << content;
}

int cmd_she(const std::string& structure_arg, bool members, int cap) {
    const pefo::Structure b = load_structure(structure_arg);
    const pefo::Dsm d = pefo::she_monoid(b, cap);
    std::cout << "domain-size: " << b.domain_size() << "\n";
    std::cout << "she-count: " << d.size() << "\n";
    std::cout << "generators: " << pefo::generator_notation(d) << "\n";
    if (members) {
        std::cout << "members:\n";
        for (const pefo::Shop& f : d.members()) std::cout << f.to_string() << "\n";
    }
    return exit_ok;
}

int cmd_classify(const std::string& structure_arg, bool equality, bool machine, int cap) {
    const pefo::Structure b = load_structure(structure_arg);
    const pefo::Classification c =
        equality ? pefo::classify_with_equality(b) : pefo::classify(b, cap);
    std::cout << (machine ? pefo::machine_report(c) : pefo::explain(c));
    return exit_ok;
}

pefo::Engine engine_from_spec(const std::string& spec, const pefo::Structure& b, int cap) {
    const int n = b.domain_size();
    if (spec == "auto") return pefo::select_engine(pefo::she_monoid(b, cap));
    if (spec == "brute") return pefo::Engine::brute();

    auto parse_args = [&](const std::string& s) {
        std::vector<int> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
        return out;
    };
    if (spec.rfind("forall:", 0) == 0) {
        auto a = parse_args(spec.substr(7));
        if (a.size() != 1) throw pefo::ValidationError("--engine forall:<b>");
        return pefo::Engine::forall_subst(n, a[0]);
    }
    if (spec.rfind("exists:", 0) == 0) {
        auto a = parse_args(spec.substr(7));
        if (a.size() != 1) throw pefo::ValidationError("--engine exists:<b>");
        return pefo::Engine::exists_subst(n, a[0]);
    }
    if (spec.rfind("fe:", 0) == 0) {
        auto a = parse_args(spec.substr(3));
        if (a.size() != 2) throw pefo::ValidationError("--engine fe:<b>,<b'>");
        return pefo::Engine::forall_exists_subst(n, a[0], a[1]);
    }
    if (spec == "a" || spec == "e" || spec == "ae") {
        const pefo::Dsm d = pefo::she_monoid(b, cap);
        const pefo::Shop* first_a = nullptr;
        const pefo::Shop* first_e = nullptr;
        for (const pefo::Shop& f : d.members()) {
            const auto sh = pefo::detect_shape(f);
            if (!first_a && sh.is_a_shop()) first_a = &f;
            if (!first_e && sh.is_e_shop()) first_e = &f;
        }
        if (spec == "a") {
            if (!first_a) throw pefo::ValidationError("no A-shop preserves this structure");
            return pefo::Engine::a_reduce(pefo::canonicalize_a(*first_a));
        }
        if (spec == "e") {
            if (!first_e) throw pefo::ValidationError("no E-shop preserves this structure");
            return pefo::Engine::e_reduce(pefo::canonicalize_e(*first_e));
        }
        if (!first_a || !first_e)
            throw pefo::ValidationError("the AE engine needs both an A-shop and an E-shop");
        const auto sh = pefo::detect_shape(pefo::compose(*first_a, *first_e));
        return pefo::Engine::ae_logspace(n, sh.a_witnesses.front(), sh.e_witnesses.front());
    }
    throw pefo::ValidationError("unknown engine spec '" + spec
                                + "' (auto, brute, forall:<b>, exists:<b>, fe:<b>,<b'>, "
                                  "a, e, ae)");
}

int cmd_eval(const std::string& structure_arg, const std::string& formula_text,
             const std::string& formula_file, const std::string& engine_spec, bool verify,
             int cap) {
    const pefo::Structure b = load_structure(structure_arg);
    std::string text = formula_text;
    if (!formula_file.empty()) {
        std::ifstream in(formula_file);
        if (!in) throw pefo::ValidationError("cannot open formula file: " + formula_file);
        text = read_stream(in);
    }
    if (text.empty()) throw pefo::ValidationError("no formula given (--formula or --formula-file)");

    pefo::ParseOptions options;
    options.signature = &b.signature();
    options.declared_free = std::vector<std::string>{}; // sentences only
    const pefo::FormulaPtr sentence = pefo::parse_formula(text, options);

    const pefo::Engine engine = engine_from_spec(engine_spec, b, cap);
    const bool value = pefo::evaluate(b, sentence, engine);
    std::cout << "engine: " << engine.describe() << "\n";
    std::cout << "result: " << (value ? "true" : "false") << "\n";
    if (verify) {
        const bool brute = pefo::evaluate_bruteforce(b, sentence);
        if (brute != value) {
            std::cout << "verify: MISMATCH (brute force says " << (brute ? "true" : "false")
                      << ")\n";
            return exit_violation;
        }
        std::cout << "verify: brute force agrees\n";
    }
    return exit_ok;
}

int cmd_lattice(int n, const std::string& dot_path, int cap) {
    const pefo::DsmLattice lattice = pefo::enumerate_dsms(n, cap);
    std::map<int, std::string> labels;
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
        labels[static_cast<int>(i)] =
            pefo::to_string(pefo::classify_monoid(lattice.nodes[i]).verdict);

    std::cout << "domain-size: " << n << "\n";
    std::cout << "dsm-count: " << lattice.nodes.size() << "\n";
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
        std::cout << "node " << i << ": size=" << lattice.nodes[i].size()
                  << " gens=" << pefo::generator_notation(lattice.nodes[i])
                  << " verdict=" << labels[static_cast<int>(i)] << "\n";
    std::cout << "edges: " << lattice.edges.size() << "\n";
    for (const auto& [lo, hi] : lattice.edges) std::cout << lo << " -> " << hi << "\n";

    if (!dot_path.empty()) write_output(dot_path, pefo::export_dot(lattice, labels));
    return exit_ok;
}

int cmd_galois(const std::string& structure_arg, int max_arity, int samples,
               std::uint64_t seed, int cap) {
    const pefo::Structure b = load_structure(structure_arg);
    const int n = b.domain_size();
    if (max_arity < 1) throw pefo::ValidationError("--max-arity must be positive");
    double positions = 1;
    for (int i = 0; i < max_arity; ++i) positions *= n;
    if (positions > 9)
        throw pefo::ValidationError("--max-arity " + std::to_string(max_arity)
                                    + " exceeds the relation-enumeration cap for domain size "
                                    + std::to_string(n));

    const pefo::Dsm d = pefo::she_monoid(b, cap);
    std::cout << "domain-size: " << n << "\n";
    std::cout << "she-count: " << d.size() << "\n";

    // Forward: definable relations are preserved by every she.
    pefo::Rng rng(seed);
    int forward_violations = 0;
    for (int i = 0; i < samples; ++i) {
        const int k = 1 + (i % 2);
        pefo::FormulaGenOptions gen;
        gen.free_vars = pefo::theta_free_vars(k);
        const pefo::FormulaPtr phi = pefo::random_formula(rng, b.signature(), n, gen);
        const pefo::Relation ext = pefo::extension(b, phi, gen.free_vars);
        for (const pefo::Shop& f : d.members())
            if (!pefo::preserves(f, ext)) ++forward_violations;
    }
    std::cout << "forward: " << samples << " formulas x " << d.size() << " shes, "
              << forward_violations << " violations\n";

    // Backward: invariant relations are definable, via their type formulas.
    int invariant_count = 0;
    int backward_mismatches = 0;
    for (int arity = 1; arity <= max_arity; ++arity) {
        std::vector<pefo::Tuple> all;
        pefo::Tuple t(static_cast<std::size_t>(arity), 0);
        while (true) {
            all.push_back(t);
            int pos = arity - 1;
            while (pos >= 0 && ++t[static_cast<std::size_t>(pos)] == n) {
                t[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        for (std::uint64_t mask = 1; mask < (1ull << all.size()); ++mask) {
            std::vector<pefo::Tuple> tuples;
            for (std::size_t i = 0; i < all.size(); ++i)
                if ((mask >> i) & 1ull) tuples.push_back(all[i]);
            const pefo::Relation s(arity, std::move(tuples));
            const bool invariant = std::all_of(d.members().begin(), d.members().end(),
                                               [&](const pefo::Shop& f) {
                                                   return pefo::preserves(f, s);
                                               });
            if (!invariant) continue;
            ++invariant_count;
            const pefo::FormulaPtr theta = pefo::theta_relation(b, s);
            if (!(pefo::extension(b, theta, pefo::theta_free_vars(arity)) == s))
                ++backward_mismatches;
        }
    }
    std::cout << "backward: " << invariant_count << " invariant relations (arity <= "
              << max_arity << "), " << backward_mismatches << " mismatches\n";

    const bool pass = forward_violations == 0 && backward_mismatches == 0;
    std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? exit_ok : exit_violation;
}

int cmd_quotient(const std::string& structure_arg, const std::string& shop_literal,
                 const std::string& out_path) {
    const pefo::Structure b = load_structure(structure_arg);
    const pefo::Shop f = pefo::Shop::parse(shop_literal);
    write_output(out_path, pefo::quotient(b, f).serialize());
    return exit_ok;
}

int cmd_fixtures(const std::string& name, const std::vector<int>& params) {
    if (name.empty()) {
        for (const std::string& f : pefo::fixture_names()) std::cout << f << "\n";
        return exit_ok;
    }
    std::cout << pefo::fixture(name, params).serialize();
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"positive equality-free first-order logic over finite structures"};
    app.require_subcommand(1);

    std::string structure_arg;
    bool members = false;
    int cap = pefo::Shop::default_enumeration_cap;

    auto* she = app.add_subcommand("she", "enumerate the shops preserving a structure");
    she->add_option("structure", structure_arg, "structure file, '-', or fixture:<name>[:params]")
        ->required();
    she->add_flag("--members", members, "list every member");
    she->add_option("--cap", cap, "shop enumeration cap");

    bool equality = false, machine = false;
    auto* classify = app.add_subcommand("classify", "complexity classification of a structure");
    classify->add_option("structure", structure_arg)->required();
    classify->add_flag("--equality", equality, "classify the fragment with equality");
    classify->add_flag("--machine", machine, "flat key=value output");
    classify->add_option("--cap", cap, "shop enumeration cap");

    std::string formula_text, formula_file, engine_spec = "auto";
    bool verify = false;
    auto* eval = app.add_subcommand("eval", "evaluate a sentence on a structure");
    eval->add_option("structure", structure_arg)->required();
    eval->add_option("--formula", formula_text, "sentence text");
    eval->add_option("--formula-file", formula_file, "file containing the sentence");
    eval->add_option("--engine", engine_spec,
                     "auto, brute, forall:<b>, exists:<b>, fe:<b>,<b'>, a, e, ae");
    eval->add_flag("--verify", verify, "cross-check against brute force");
    eval->add_option("--cap", cap, "shop enumeration cap");

    int lattice_n = 2;
    std::string dot_path;
    int lattice_cap = 3;
    auto* lattice = app.add_subcommand("lattice", "enumerate all monoids on a small domain");
    lattice->add_option("n", lattice_n, "domain size")->required();
    lattice->add_option("--dot", dot_path, "write DOT to a file ('-' for stdout)");
    lattice->add_option("--cap", lattice_cap, "lattice enumeration cap (default 3)");

    int max_arity = 2, samples = 200;
    std::uint64_t seed = 1729;
    auto* galois = app.add_subcommand("galois", "check both definability directions");
    galois->add_option("structure", structure_arg)->required();
    galois->add_option("--max-arity", max_arity, "relation arity bound (default 2)");
    galois->add_option("--samples", samples, "random formulas to test (default 200)");
    galois->add_option("--seed", seed, "generator seed (default 1729)");
    galois->add_option("--cap", cap, "shop enumeration cap");

    std::string shop_literal, out_path;
    auto* quotient = app.add_subcommand("quotient", "quotient by an equivalence shop");
    quotient->add_option("structure", structure_arg)->required();
    quotient->add_option("--shop", shop_literal, "equivalence shop literal, e.g. (01|01|2)")
        ->required();
    quotient->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string fixture_name;
    std::vector<int> fixture_params;
    auto* fixtures = app.add_subcommand("fixtures", "print a named structure");
    fixtures->add_option("name", fixture_name, "fixture name (omit to list)");
    fixtures->add_option("params", fixture_params, "fixture parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (she->parsed()) return cmd_she(structure_arg, members, cap);
        if (classify->parsed()) return cmd_classify(structure_arg, equality, machine, cap);
        if (eval->parsed())
            return cmd_eval(structure_arg, formula_text, formula_file, engine_spec, verify, cap);
        if (lattice->parsed()) return cmd_lattice(lattice_n, dot_path, lattice_cap);
        if (galois->parsed())
            return cmd_galois(structure_arg, max_arity, samples, seed, cap);
        if (quotient->parsed()) return cmd_quotient(structure_arg, shop_literal, out_path);
        if (fixtures->parsed()) return cmd_fixtures(fixture_name, fixture_params);
    } catch (const pefo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
