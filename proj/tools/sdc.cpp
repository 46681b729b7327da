// Command-line front end for batch work with binary self-dual codes:
// verify, analyze, construct, enumerate, and classify codes from files or
// the built-in catalog. Every subcommand is a thin shell over the library
// and is deterministic for fixed inputs and options; --threads never
// changes any output byte.
//
// Exit codes: 0 success, 1 verification/precondition/budget failure,
// 2 usage, file, or parse errors.

#include <sdc/bounds.hpp>
#include <sdc/catalog.hpp>
#include <sdc/equivalence.hpp>
#include <sdc/io.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace {

struct Options {
    bool rows = false; // machine-readable row output
    int threads = 0;   // 0: SDC_THREADS or hardware default
    std::uint64_t budget = sdc::default_search_budget;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

sdc::LinearCode load_code(const std::string& spec) {
    if (std::filesystem::exists(spec)) return sdc::parse_code_file(spec);
    if (sdc::catalog_has(spec)) return sdc::materialize(spec);
    throw UsageError("no such file or catalog id: " + spec);
}

// Accepts an inline support list, a named catalog support, or a file
// holding one support per line (first line used).
sdc::BitVector load_support_vector(const std::string& spec, int n) {
    for (const auto& s : sdc::named_supports()) {
        if (s.id == spec) {
            if (s.length != n)
                throw UsageError("support " + spec + " has length " + std::to_string(s.length) +
                                 ", code has length " + std::to_string(n));
            return sdc::BitVector::from_support(n, s.coords);
        }
    }
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        const auto vecs = sdc::parse_support_file(in, n);
        if (vecs.empty()) throw UsageError("no support sets in " + spec);
        return vecs.front();
    }
    const auto coords = sdc::parse_support_line(spec);
    for (int c : coords)
        if (c > n)
            throw UsageError("coordinate " + std::to_string(c) + " exceeds length " +
                             std::to_string(n));
    return sdc::BitVector::from_support(n, coords);
}

std::string support_string(const sdc::BitVector& v) {
    std::string s = "{";
    bool first = true;
    for (int c : v.support()) {
        if (!first) s += ',';
        first = false;
        s += std::to_string(c);
    }
    return s + "}";
}

std::string params_string(const sdc::LinearCode& c, std::optional<int> d = std::nullopt) {
    std::string s = "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension());
    if (d) s += "," + std::to_string(*d);
    return s + "]";
}

void write_outputs(const sdc::LinearCode& c, const std::string& out) {
    if (out.empty()) return;
    if (out == "-")
        std::cout << sdc::render_code(c);
    else
        sdc::write_code_file(out, c);
}

const char* yn(bool b) { return b ? "yes" : "no"; }

// ---- subcommand bodies ----------------------------------------------------

int run_info(const Options& opt, const std::string& input) {
    const sdc::LinearCode c = load_code(input);
    const bool sd = sdc::is_self_dual(c);
    std::string parity = "n/a";
    if (sdc::is_self_orthogonal(c))
        parity = sdc::to_string(sdc::parity_class(c));
    if (opt.rows) {
        std::cout << "info input=" << input << " n=" << c.length() << " k=" << c.dimension()
                  << " self_dual=" << yn(sd) << " parity=" << parity << "\n";
    } else {
        std::cout << input << ": " << params_string(c) << " self-dual: " << yn(sd)
                  << "  parity: " << parity << "\n";
    }
    return 0;
}

int run_verify(const Options& opt, const std::string& input) {
    sdc::VerifyReport rep;
    if (!std::filesystem::exists(input) && sdc::catalog_has(input)) {
        rep = sdc::verify_entry(input, opt.threads);
    } else {
        const sdc::LinearCode c = load_code(input);
        if (!sdc::is_self_dual(c)) {
            if (opt.rows)
                std::cout << "verify input=" << input << " check=self-dual pass=no\n";
            else
                std::cout << input << ": FAIL self-dual: code is not self-dual\n";
            return 1;
        }
        const sdc::ParityClass pc = sdc::parity_class(c);
        const int d = sdc::min_weight(c, opt.threads);
        rep.id = input;
        rep.checks.push_back({"self-dual", true, "generator is self-orthogonal of full rank"});
        rep.checks.push_back({"parameters", true, params_string(c, d)});
        rep.checks.push_back({"parity", true, sdc::to_string(pc)});
        if (pc == sdc::ParityClass::SinglyEven) {
            const sdc::SExtremalReport se = sdc::s_extremal_report(c, opt.threads);
            rep.checks.push_back({"s-extremal", se.s_extremal,
                                  "d(S)=" + std::to_string(se.shadow_weight) + " bound " +
                                      std::to_string(se.bound)});
        }
    }
    for (const auto& ch : rep.checks) {
        if (opt.rows)
            std::cout << "verify input=" << input << " check=" << ch.name
                      << " pass=" << yn(ch.pass) << "\n";
        else
            std::cout << (ch.pass ? "PASS " : "FAIL ") << ch.name << ": " << ch.detail << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int run_shadow(const Options& opt, const std::string& input) {
    const sdc::LinearCode c = load_code(input);
    const sdc::ShadowDecomposition sd = sdc::shadow_decomposition(c);
    const int w1 = sdc::coset_min_weight(sd.c0, sd.rep1, opt.threads);
    const int w3 = sdc::coset_min_weight(sd.c0, sd.rep3, opt.threads);
    if (opt.rows) {
        std::cout << "shadow input=" << input << " n=" << c.length()
                  << " c0_dim=" << sd.c0.dimension() << " ds=" << std::min(w1, w3)
                  << " d_coset1=" << w1 << " d_coset3=" << w3 << " rep1=" << support_string(sd.rep1)
                  << " rep2=" << support_string(sd.rep2) << " rep3=" << support_string(sd.rep3)
                  << "\n";
    } else {
        std::cout << "doubly even subcode: dimension " << sd.c0.dimension() << "\n";
        std::cout << "shadow minimum weight: " << std::min(w1, w3) << " (cosets " << w1 << ", "
                  << w3 << ")\n";
        std::cout << "rep1: " << support_string(sd.rep1) << "\n";
        std::cout << "rep2: " << support_string(sd.rep2) << "\n";
        std::cout << "rep3: " << support_string(sd.rep3) << "\n";
    }
    return 0;
}

int run_sextremal(const Options& opt, const std::string& input) {
    const sdc::LinearCode c = load_code(input);
    const sdc::SExtremalReport se = sdc::s_extremal_report(c, opt.threads);
    if (opt.rows) {
        std::cout << "sextremal input=" << input << " n=" << c.length() << " k=" << c.dimension()
                  << " d=" << se.min_weight << " ds=" << se.shadow_weight
                  << " sextremal=" << yn(se.s_extremal) << " exceptional=" << yn(se.exceptional)
                  << "\n";
    } else {
        std::cout << "s-extremal: " << yn(se.s_extremal) << "  "
                  << params_string(c, se.min_weight) << "  d(S)=" << se.shadow_weight;
        if (se.exceptional) std::cout << "  (exceptional length)";
        std::cout << "\n";
    }
    return 0;
}

int run_minweight(const Options& opt, const std::string& input, int at_least) {
    const sdc::LinearCode c = load_code(input);
    if (at_least > 0) {
        const bool ok = sdc::min_weight_at_least(c, at_least, opt.threads);
        if (opt.rows)
            std::cout << "minweight input=" << input << " at_least=" << at_least
                      << " result=" << yn(ok) << "\n";
        else
            std::cout << "minimum weight " << (ok ? ">= " : "< ") << at_least << "\n";
        return 0;
    }
    const int d = sdc::min_weight(c, opt.threads);
    if (opt.rows)
        std::cout << "minweight input=" << input << " d=" << d << "\n";
    else
        std::cout << "minimum weight: " << d << "\n";
    return 0;
}

int run_wenum(const Options& opt, const std::string& input) {
    const sdc::LinearCode c = load_code(input);
    const sdc::WeightEnumerator we = sdc::weight_enumerator(c, opt.threads);
    if (opt.rows) {
        for (size_t w = 0; w < we.counts.size(); ++w)
            if (we.counts[w])
                std::cout << "wenum input=" << input << " w=" << w << " count=" << we.counts[w]
                          << "\n";
    } else {
        std::cout << we.to_polynomial() << "\n";
    }
    return 0;
}

int run_neighbor(const Options& opt, const std::string& input,
                 const std::vector<std::string>& supports, const std::string& out) {
    const sdc::LinearCode c = load_code(input);
    std::vector<sdc::BitVector> xs;
    xs.reserve(supports.size());
    for (const auto& s : supports) xs.push_back(load_support_vector(s, c.length()));
    const sdc::LinearCode nb =
        xs.size() == 1 ? sdc::neighbor(c, xs.front()) : sdc::neighbor_multi(c, xs);
    const int d = sdc::min_weight(nb, opt.threads);
    if (opt.rows)
        std::cout << "neighbor input=" << input << " n=" << nb.length() << " k=" << nb.dimension()
                  << " d=" << d << "\n";
    else
        std::cout << "neighbor: " << params_string(nb, d) << "\n";
    write_outputs(nb, out);
    return 0;
}

int run_neighbors_enum(const Options& opt, const std::string& input, int filter_d,
                       std::uint64_t sample, std::uint64_t seed, std::uint64_t limit,
                       bool print_rows) {
    const sdc::LinearCode c = load_code(input);
    std::uint64_t passed = 0;
    const auto filter = [&](const sdc::LinearCode& nb) {
        return filter_d <= 0 || sdc::min_weight_at_least(nb, filter_d, opt.threads);
    };
    const auto visit = [&](const sdc::LinearCode& nb) {
        ++passed;
        if (limit && passed > limit) return;
        if (opt.rows) {
            std::cout << "neighbor index=" << passed << " n=" << nb.length()
                      << " k=" << nb.dimension();
            if (print_rows) {
                std::cout << " rows=";
                for (int i = 0; i < nb.generator().rows(); ++i) {
                    if (i) std::cout << ';';
                    std::cout << nb.generator().row(i).to_string();
                }
            }
            std::cout << "\n";
        } else {
            std::cout << "N" << passed << ": " << params_string(nb);
            if (print_rows) {
                std::cout << " rows:";
                for (int i = 0; i < nb.generator().rows(); ++i)
                    std::cout << ' ' << nb.generator().row(i).to_string();
            }
            std::cout << "\n";
        }
    };
    const std::uint64_t emitted =
        sample ? sdc::sample_self_dual_neighbors(c, sample, seed, filter, visit)
               : sdc::enumerate_self_dual_neighbors(c, filter, visit);
    if (opt.rows)
        std::cout << "neighbors-enum input=" << input << " emitted=" << emitted
                  << " passed=" << passed << (sample ? " mode=sampled" : " mode=exhaustive")
                  << "\n";
    else
        std::cout << "emitted " << emitted << (sample ? " sampled" : "") << " neighbors, "
                  << passed << " passed the filter\n";
    return 0;
}

int run_n1n3(const Options& opt, const std::string& input, const std::string& out1,
             const std::string& out3) {
    const sdc::LinearCode c = load_code(input);
    const sdc::NeighborPair p = sdc::n1_n3_neighbors(c);
    const int d1 = sdc::min_weight(p.n1, opt.threads);
    const int d3 = sdc::min_weight(p.n3, opt.threads);
    if (opt.rows) {
        std::cout << "n1 input=" << input << " n=" << p.n1.length() << " k=" << p.n1.dimension()
                  << " d=" << d1 << "\n";
        std::cout << "n3 input=" << input << " n=" << p.n3.length() << " k=" << p.n3.dimension()
                  << " d=" << d3 << "\n";
    } else {
        std::cout << "N1: " << params_string(p.n1, d1) << "\n";
        std::cout << "N3: " << params_string(p.n3, d3) << "\n";
    }
    write_outputs(p.n1, out1);
    write_outputs(p.n3, out3);
    return 0;
}

int run_subtract(const Options& opt, const std::string& input, int i, int j,
                 const std::string& out) {
    const sdc::LinearCode c = load_code(input);
    const sdc::LinearCode s = sdc::subtract(c, i, j);
    const int d = sdc::min_weight(s, opt.threads);
    if (opt.rows)
        std::cout << "subtract input=" << input << " i=" << i << " j=" << j << " n=" << s.length()
                  << " k=" << s.dimension() << " d=" << d << "\n";
    else
        std::cout << "subtract(" << i << "," << j << "): " << params_string(s, d) << "\n";
    write_outputs(s, out);
    return 0;
}

int run_extend(const Options& opt, const std::string& input, const std::string& support,
               const std::string& out) {
    const sdc::LinearCode c = load_code(input);
    const sdc::BitVector t = load_support_vector(support, c.length());
    const sdc::LinearCode e = sdc::extend_odd(c, t);
    const int d = sdc::min_weight(e, opt.threads);
    if (opt.rows)
        std::cout << "extend input=" << input << " n=" << e.length() << " k=" << e.dimension()
                  << " d=" << d << "\n";
    else
        std::cout << "extension: " << params_string(e, d) << "\n";
    write_outputs(e, out);
    return 0;
}

int run_classify(const Options& opt, const std::vector<std::string>& inputs) {
    std::vector<sdc::LinearCode> codes;
    codes.reserve(inputs.size());
    for (const auto& s : inputs) codes.push_back(load_code(s));
    const sdc::PartitionResult part = sdc::partition_classes(codes, opt.budget, opt.threads);
    if (opt.rows) {
        for (size_t ci = 0; ci < part.classes.size(); ++ci) {
            std::cout << "class index=" << ci + 1 << " members=";
            for (size_t m = 0; m < part.classes[ci].size(); ++m) {
                if (m) std::cout << ',';
                std::cout << inputs[part.classes[ci][m]];
            }
            std::cout << "\n";
        }
        for (const auto& [a, b] : part.unresolved)
            std::cout << "unresolved a=" << inputs[a] << " b=" << inputs[b] << "\n";
        std::cout << "classify classes=" << part.classes.size()
                  << " unresolved=" << part.unresolved.size() << "\n";
    } else {
        for (size_t ci = 0; ci < part.classes.size(); ++ci) {
            std::cout << "class " << ci + 1 << ":";
            for (size_t idx : part.classes[ci]) std::cout << ' ' << inputs[idx];
            std::cout << "\n";
        }
        if (part.unresolved.empty()) {
            std::cout << "unresolved pairs: none\n";
        } else {
            std::cout << "unresolved pairs:\n";
            for (const auto& [a, b] : part.unresolved)
                std::cout << "  " << inputs[a] << " ~? " << inputs[b] << "\n";
        }
        std::cout << part.classes.size() << " classes\n";
    }
    return 0;
}

int run_catalog_list(const Options& opt) {
    for (const auto& e : sdc::catalog_entries()) {
        const char* kind = "";
        switch (e.kind) {
        case sdc::CatalogEntry::Kind::Circulant: kind = "circulant"; break;
        case sdc::CatalogEntry::Kind::FourBlock: kind = "four-block"; break;
        case sdc::CatalogEntry::Kind::NeighborOf: kind = "neighbor"; break;
        case sdc::CatalogEntry::Kind::SubtractionOf: kind = "subtraction"; break;
        case sdc::CatalogEntry::Kind::ExtensionOf: kind = "extension"; break;
        }
        if (opt.rows)
            std::cout << "entry id=" << e.id << " kind=" << kind << " n=" << e.expected.n
                      << " k=" << e.expected.k << " d=" << e.expected.d << "\n";
        else
            std::cout << e.id << "  " << kind << "  [" << e.expected.n << "," << e.expected.k
                      << "," << e.expected.d << "]  " << e.note << "\n";
    }
    return 0;
}

int run_catalog_supports(const Options& opt) {
    for (const auto& s : sdc::named_supports()) {
        if (opt.rows)
            std::cout << "support id=" << s.id << " length=" << s.length << " coords="
                      << support_string(sdc::BitVector::from_support(s.length, s.coords)) << "\n";
        else
            std::cout << s.id << "  length " << s.length << "  "
                      << support_string(sdc::BitVector::from_support(s.length, s.coords)) << "  "
                      << s.note << "\n";
    }
    return 0;
}

int run_catalog_show(const Options& opt, const std::string& id, const std::string& out) {
    const sdc::LinearCode c = sdc::materialize(id); // throws on unknown id
    if (opt.rows)
        std::cout << "entry id=" << id << " n=" << c.length() << " k=" << c.dimension() << "\n";
    else
        std::cout << id << ": " << params_string(c) << "\n";
    write_outputs(c, out);
    return 0;
}

int run_catalog_verify(const Options& opt, const std::vector<std::string>& ids) {
    bool all = true;
    for (const auto& id : ids) {
        const sdc::VerifyReport rep = sdc::verify_entry(id, opt.threads);
        for (const auto& ch : rep.checks) {
            if (opt.rows)
                std::cout << "verify id=" << id << " check=" << ch.name << " pass=" << yn(ch.pass)
                          << "\n";
            else
                std::cout << id << " " << (ch.pass ? "PASS " : "FAIL ") << ch.name << ": "
                          << ch.detail << "\n";
        }
        all = all && rep.all_pass();
    }
    return all ? 0 : 1;
}

int run_bounds(const Options& opt, int n, int d) {
    const sdc::BoundReport r = d > 0 ? sdc::bounds(n, d) : sdc::bounds(n);
    if (opt.rows) {
        std::cout << "bounds n=" << n << " extremal_bound=" << r.extremal_bound;
        if (r.d) {
            std::cout << " d=" << *r.d << " shadow_bound=" << *r.shadow_bound
                      << " exceptional=" << yn(r.exceptional);
            if (r.exceptional_shadow_weight)
                std::cout << " exceptional_shadow_weight=" << *r.exceptional_shadow_weight;
            if (r.s_extremal_admissible) std::cout << " admissible=" << yn(*r.s_extremal_admissible);
        }
        std::cout << "\n";
        return 0;
    }
    std::cout << "extremal bound at n=" << n << ": d <= " << r.extremal_bound << "\n";
    if (!r.d) return 0;
    std::cout << "shadow bound: d(S) <= n/2 + 4 - 2d = " << *r.shadow_bound << "\n";
    if (r.exceptional)
        std::cout << "exceptional length: d(S) = n/2 + 8 - 2d = " << *r.exceptional_shadow_weight
                  << "\n";
    if (r.s_extremal_admissible) {
        std::string range;
        if (r.admissible_min_n && r.admissible_max_n)
            range = std::to_string(*r.admissible_min_n) + " <= n <= " +
                    std::to_string(*r.admissible_max_n);
        else if (r.admissible_max_n)
            range = "n <= 6d-4 = " + std::to_string(*r.admissible_max_n);
        std::cout << (*r.s_extremal_admissible ? "admissible (" : "not admissible (") << range
                  << ")\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary self-dual code toolkit"};
    app.require_subcommand(1);
    Options opt;
    std::string format = "text";
    app.add_option("--format", format, "output format: text | rows")
        ->check(CLI::IsMember({"text", "rows"}));
    app.add_option("--threads", opt.threads, "worker threads (0: SDC_THREADS or hardware)");
    app.add_option("--budget", opt.budget, "equivalence search node budget");

    std::string input, out, out1, out3;
    std::vector<std::string> inputs, supports;
    int coord_i = 0, coord_j = 0, at_least = 0, filter_d = 0, bound_n = 0, bound_d = 0;
    std::uint64_t sample = 0, seed = 1, limit = 0;
    bool print_rows = false;

    auto* info = app.add_subcommand("info", "length, dimension, parity of a code");
    info->add_option("code", input)->required();

    auto* verify = app.add_subcommand("verify", "check a code (or catalog entry) claims");
    verify->add_option("code", input)->required();

    auto* shadow = app.add_subcommand("shadow", "shadow decomposition and minimum weight");
    shadow->add_option("code", input)->required();

    auto* sextremal = app.add_subcommand("sextremal", "s-extremality report");
    sextremal->add_option("code", input)->required();

    auto* minweight = app.add_subcommand("minweight", "exact minimum weight");
    minweight->add_option("code", input)->required();
    minweight->add_option("--at-least", at_least, "early-abort filter threshold");

    auto* wenum = app.add_subcommand("wenum", "exact weight enumerator");
    wenum->add_option("code", input)->required();

    auto* neighbor = app.add_subcommand("neighbor", "self-dual neighbor over given vector(s)");
    neighbor->add_option("code", input)->required();
    neighbor->add_option("support", supports, "support list(s), file, or catalog support id")
        ->required();
    neighbor->add_option("--out", out, "write the resulting code file ('-' for stdout)");

    auto* nenum = app.add_subcommand("neighbors-enum", "enumerate all self-dual neighbors");
    nenum->add_option("code", input)->required();
    nenum->add_option("--filter-d", filter_d, "keep only neighbors with min weight >= t");
    nenum->add_option("--sample", sample, "sampled (non-exhaustive) mode: number of functionals");
    nenum->add_option("--seed", seed, "seed for the sampled mode");
    nenum->add_option("--limit", limit, "print at most this many neighbors");
    nenum->add_flag("--print-rows", print_rows, "include generator rows in the listing");

    auto* n1n3 = app.add_subcommand("n1n3", "the two shadow-coset neighbors");
    n1n3->add_option("code", input)->required();
    n1n3->add_option("--out1", out1, "write N1 code file");
    n1n3->add_option("--out3", out3, "write N3 code file");

    auto* subtract = app.add_subcommand("subtract", "drop two equal-valued coordinates");
    subtract->add_option("code", input)->required();
    subtract->add_option("i", coord_i)->required();
    subtract->add_option("j", coord_j)->required();
    subtract->add_option("--out", out, "write the resulting code file ('-' for stdout)");

    auto* extend = app.add_subcommand("extend", "two-coordinate extension by an odd vector");
    extend->add_option("code", input)->required();
    extend->add_option("t", inputs, "odd-weight support list, file, or catalog support id")
        ->required()
        ->expected(1);
    extend->add_option("--out", out, "write the resulting code file ('-' for stdout)");

    auto* classify = app.add_subcommand("classify", "partition codes into equivalence classes");
    classify->add_option("codes", inputs)->required()->expected(-1);

    auto* catalog = app.add_subcommand("catalog", "embedded code data");
    auto* cat_list = catalog->add_subcommand("list", "list entries");
    auto* cat_supports = catalog->add_subcommand("supports", "list named support vectors");
    auto* cat_show = catalog->add_subcommand("show", "materialize an entry");
    cat_show->add_option("id", input)->required();
    cat_show->add_option("--out", out, "write the code file ('-' for stdout)");
    auto* cat_verify = catalog->add_subcommand("verify", "verify entries against expectations");
    cat_verify->add_option("ids", inputs)->required()->expected(-1);
    catalog->require_subcommand(0, 1);

    auto* bounds = app.add_subcommand("bounds", "length and shadow bound formulas");
    bounds->add_option("--n", bound_n)->required();
    bounds->add_option("--d", bound_d);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opt.rows = format == "rows";

    try {
        if (*info) return run_info(opt, input);
        if (*verify) return run_verify(opt, input);
        if (*shadow) return run_shadow(opt, input);
        if (*sextremal) return run_sextremal(opt, input);
        if (*minweight) return run_minweight(opt, input, at_least);
        if (*wenum) return run_wenum(opt, input);
        if (*neighbor) return run_neighbor(opt, input, supports, out);
        if (*nenum) return run_neighbors_enum(opt, input, filter_d, sample, seed, limit, print_rows);
        if (*n1n3) return run_n1n3(opt, input, out1, out3);
        if (*subtract) return run_subtract(opt, input, coord_i, coord_j, out);
        if (*extend) return run_extend(opt, input, inputs.front(), out);
        if (*classify) return run_classify(opt, inputs);
        if (*catalog) {
            if (*cat_supports) return run_catalog_supports(opt);
            if (*cat_show) return run_catalog_show(opt, input, out);
            if (*cat_verify) return run_catalog_verify(opt, inputs);
            (void)cat_list;
            return run_catalog_list(opt);
        }
        if (*bounds) return run_bounds(opt, bound_n, bound_d);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sdc::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
