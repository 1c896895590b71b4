// schubert: command-line front end.
//   poly W [--single] [--eval SPEC]
//   bsl W (--count | --list)
//   complex W (--generic | --identity | --zero | --matrix FILE) [--field q|p|p:PRIME] [--homology] [--dump]
//   ideal W [--member FILE] [--fulton]
//   verify --suite NAME [--seed N] [--threads T]
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse error, 3 semantic error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "schubert/complex.hpp"
#include "schubert/functor.hpp"
#include "schubert/ideal.hpp"
#include "schubert/io.hpp"
#include "schubert/poly.hpp"
#include "schubert/superlabel.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Permutation perm_arg(const std::string& text) {
    try {
        return parse_permutation(text);
    } catch (const std::exception& ex) {
        throw ParseError(ex.what());
    }
}

Matrix<mpq_class> read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return matrix_from_json(json::parse(in));
    } catch (const json::exception& ex) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

// "all_x=1,all_y=-1" or "x1=2,y2=1/3,..."; later keys override earlier ones.
std::map<Var, mpq_class> parse_assignment(const std::string& spec, int n) {
    std::map<Var, mpq_class> a;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected name=value in '" + item + "'");
        const auto name = item.substr(0, eq);
        mpq_class value;
        try {
            value = parse_rational(item.substr(eq + 1));
        } catch (const std::exception& ex) {
            throw ParseError(ex.what());
        }
        if (name == "all_x" || name == "all_y") {
            for (int i = 1; i <= n; ++i) a[{name == "all_x" ? Var::X : Var::Y, i}] = value;
            continue;
        }
        if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) throw ParseError("unknown variable '" + name + "'");
        int idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stoi(name.substr(1), &used);
            if (used != name.size() - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("unknown variable '" + name + "'");
        }
        a[{name[0] == 'x' ? Var::X : Var::Y, idx}] = value;
    }
    return a;
}

void emit(const json& j, bool plain, const std::string& text) {
    if (plain) std::cout << text << '\n';
    else std::cout << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double Schubert polynomials, balanced super labelings and Schubert complexes"};
    app.require_subcommand(1);
    bool plain = false;
    app.add_flag("--plain", plain, "Plain text instead of JSON");

    std::string word;
    auto* poly = app.add_subcommand("poly", "Double (or single) Schubert polynomial of W");
    bool single = false;
    std::string eval;
    poly->add_option("w", word, "Permutation, e.g. 321 or 10,3,1,...")->required();
    poly->add_flag("--single", single, "Set y = 0");
    poly->add_option("--eval", eval, "Evaluate at all_x=..,all_y=.. or x1=..,y2=..");

    auto* bsl = app.add_subcommand("bsl", "Balanced super labelings of D(W)");
    bool count = false, list = false;
    bsl->add_option("w", word)->required();
    auto* count_flag = bsl->add_flag("--count", count, "Number of BSLs");
    auto* list_flag = bsl->add_flag("--list", list, "All BSLs as JSON");
    count_flag->excludes(list_flag);

    auto* cx = app.add_subcommand("complex", "Schubert complex of W for a flagged map");
    std::string matrix_file, field = "q";
    bool generic = false, ident = false, zero = false, homology = false, dump = false;
    cx->add_option("w", word)->required();
    auto* src = cx->add_option_group("map", "Choice of the flagged map");
    src->add_option("--matrix", matrix_file, "JSON matrix file {\"n\", \"entries\"}");
    src->add_flag("--generic", generic, "Symbolic entries d[i][j]");
    src->add_flag("--identity", ident, "Identity map");
    src->add_flag("--zero", zero, "Zero map");
    src->require_option(1);
    cx->add_option("--field", field, "q, p, or p:PRIME");
    cx->add_flag("--homology", homology, "Report homology ranks");
    cx->add_flag("--dump", dump, "Include differentials");

    auto* id = app.add_subcommand("ideal", "Schubert determinantal ideal of W");
    std::string member_file;
    bool fulton = false;
    id->add_option("w", word)->required();
    id->add_option("--member", member_file, "Test locus membership of a matrix file");
    id->add_flag("--fulton", fulton, "Fulton class with variable dictionary");

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    ver->add_option("--suite", suite)->required()->check(CLI::IsMember({"s4", "s5", "paper-examples"}));
    ver->add_option("--seed", seed, "Random seed");
    ver->add_option("--threads", threads, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (poly->parsed()) {
            const auto w = perm_arg(word);
            const auto p = single ? single_schubert(w) : double_schubert(w);
            if (!eval.empty()) {
                const auto value = substitute(p, parse_assignment(eval, w.size()));
                emit({{"w", to_string(w)}, {"value", value.get_str()}}, plain, value.get_str());
            } else {
                emit({{"w", to_string(w)}, {"single", single}, {"poly", to_string(p)}}, plain, to_string(p));
            }
        } else if (bsl->parsed()) {
            const auto w = perm_arg(word);
            const auto all = enumerate_bsl(w);
            if (list) {
                json arr = json::array();
                std::string text;
                for (const auto& t : all) {
                    arr.push_back(to_json(t));
                    text += to_string(t) + '\n';
                }
                emit({{"w", to_string(w)}, {"bsl", arr}}, plain, text.empty() ? text : text.substr(0, text.size() - 1));
            } else {
                emit({{"w", to_string(w)}, {"count", all.size()}}, plain, std::to_string(all.size()));
            }
        } else if (cx->parsed()) {
            const auto w = perm_arg(word);
            std::uint64_t prime = 0;
            if (field == "p") prime = default_prime();
            else if (field.rfind("p:", 0) == 0) {
                try {
                    prime = std::stoull(field.substr(2));
                } catch (const std::exception&) {
                    throw ParseError("bad prime in --field " + field);
                }
                if (prime <= (1ULL << 30) || !is_prime(prime)) throw SemanticError("--field needs a prime above 2^30");
            } else if (field != "q") throw ParseError("--field must be q, p or p:PRIME");
            const auto kind = prime ? FlaggedMap::Kind::PrimeField : FlaggedMap::Kind::Rational;
            FlaggedMap map;
            if (generic) map = FlaggedMap::generic(w.size());
            else if (ident) map = FlaggedMap::identity(w.size(), kind, prime);
            else if (zero) map = FlaggedMap::zero(w.size(), kind, prime);
            else {
                auto m = read_matrix(matrix_file);
                if (static_cast<int>(m.rows()) < w.size())
                    throw SemanticError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.rows()) +
                                        " but w needs " + std::to_string(w.size()));
                map = prime ? FlaggedMap::prime_field(std::move(m), prime) : FlaggedMap::rational(std::move(m));
            }
            if (homology && generic) throw SemanticError("--homology needs a specialized map");
            const auto c = build_complex(w, map);
            auto out = to_json(c, dump);
            const bool dd = verify_dd_zero(c);
            out["ddzero"] = dd;
            out["euler"] = euler_characteristic(c);
            std::string text = "ranks " + out["ranks"].dump() + "\nddzero " + (dd ? "true" : "false");
            if (homology) {
                out["homology"] = homology_ranks(c);
                text += "\nhomology " + out["homology"].dump();
            }
            emit(out, plain, text);
        } else if (id->parsed()) {
            const auto w = perm_arg(word);
            std::vector<MinorDescriptor> gens;
            try {
                gens = ideal_generators(w.inverse());
            } catch (const std::length_error& ex) {
                throw SemanticError(ex.what());
            }
            json out{{"w", to_string(w)}, {"codimension", expected_codimension(w)}, {"generators", to_json(gens)}};
            std::string text;
            for (const auto& g : gens) text += to_string(g) + '\n';
            text += "codimension " + std::to_string(expected_codimension(w));
            if (!member_file.empty()) {
                const auto m = read_matrix(member_file);
                if (static_cast<int>(m.rows()) != w.size()) throw SemanticError("matrix size differs from w");
                const bool in = locus_membership(w, m);
                out["member"] = in;
                text += std::string("\nmember ") + (in ? "true" : "false");
            }
            if (fulton) {
                const auto f = fulton_class(w);
                out["fulton"] = {{"class", to_string(f.polynomial)}, {"dictionary", f.dictionary}};
                text += "\nfulton " + to_string(f.polynomial);
            }
            emit(out, plain, text);
        } else if (ver->parsed()) {
            const auto report = run_suite(suite, seed, threads);
            std::string text;
            for (const auto& c : report.checks)
                text += (c.passed ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : "  " + c.detail) + '\n';
            text += report.passed() ? "all passed" : "FAILED";
            emit(report.to_json(), plain, text);
            return report.passed() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
