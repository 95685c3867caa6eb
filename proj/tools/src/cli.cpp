/**************************************************************************
 * cli.cpp
 *
 * Copyright 2026 The ooalfsr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "ooalfsr_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "ooalfsr/construct.hpp"
#include "ooalfsr/hyper.hpp"
#include "ooalfsr/io.hpp"
#include "ooalfsr/lfsr.hpp"
#include "ooalfsr/ooa.hpp"
#include "ooalfsr/table1.hpp"

namespace ooalfsr::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint32_t q = 0;
    unsigned t = 0;
    std::string poly;
    std::string seed;
    std::string file;
    std::string out;
    std::string mode;
    std::uint64_t lambda = 0;
};

std::vector<Elem> parse_seed(const std::string& text, const Field& F, unsigned t) {
    std::vector<Elem> seed;
    if (text.find(',') == std::string::npos && F.order() <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9') throw UsageError("bad seed '" + text + "'");
            seed.push_back(static_cast<Elem>(c - '0'));
        }
    } else {
        seed = Poly::parse(F, text).coeffs();
        // parse() trims trailing zeroes; restore them from the comma count.
        seed.resize(static_cast<std::size_t>(std::count(text.begin(), text.end(), ',')) + 1, 0);
    }
    for (auto x : seed)
        if (!F.contains(x)) throw UsageError("seed symbol " + std::to_string(x) + " not in F_" + std::to_string(F.order()));
    if (seed.size() != t) throw UsageError("seed must have " + std::to_string(t) + " symbols");
    return seed;
}

Lfsr make_lfsr(const Options& o) {
    const Field F = Field::of_order(o.q);
    Poly f = o.poly.empty() ? first_primitive_poly(F, o.t) : Poly::parse(F, o.poly);
    if (f.degree() != o.t) throw UsageError("--poly must have degree " + std::to_string(o.t));
    if (!f.is_monic()) throw UsageError("--poly must be monic");
    if (!is_primitive_poly(f)) throw UsageError("--poly " + f.to_string() + " is not primitive");
    if (o.seed.empty()) return Lfsr::with_impulse_seed(std::move(f));
    return Lfsr(std::move(f), parse_seed(o.seed, F, o.t));
}

// Writes via --out when given, else to `out`.
void emit(const Options& o, std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (o.out.empty()) {
        write(out);
        return;
    }
    std::ofstream file(o.out);
    if (!file) throw UsageError("cannot open " + o.out + " for writing");
    write(file);
}

OoaArray load_ooa(const Options& o) {
    if (o.file.empty()) return read_ooa(std::cin);
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot open " + o.file);
    return read_ooa(in);
}

std::string join(std::span<const Elem> v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

int field_info(const Options& o, std::ostream& out) {
    const Field F = Field::of_order(o.q);
    out << "q=" << F.order() << " p=" << F.characteristic() << " n=" << F.degree() << '\n';
    out << "modulus=" << join(F.modulus()) << '\n';
    out << "primitive=" << F.primitive() << '\n';
    return ok;
}

int primitive_polys(const Options& o, std::ostream& out) {
    for (const auto& f : enumerate_primitive_polys(Field::of_order(o.q), o.t)) out << f.to_string() << '\n';
    return ok;
}

int lfsr(const Options& o, std::ostream& out) {
    const auto l = make_lfsr(o);
    const auto seq = generate_period(l);
    out << "poly=" << l.characteristic().to_string() << " seed=" << join(l.seed()) << '\n';
    out << "period=" << seq.size() << '\n';
    out << "sequence=" << seq.to_string() << '\n';
    for (Elem beta = 1; beta < l.base().order(); ++beta) out << "k_" << beta << '=' << k_beta(l, beta) << '\n';
    return ok;
}

int runs_ooa(const Options& o, std::ostream& out, std::ostream& err) {
    const auto l = make_lfsr(o);
    const auto map = runs_column_map(l);
    for (const auto& [a, b] : map.collisions())
        err << "note: " << to_string(a) << " and " << to_string(b) << " share column " << map.column(a) << " of M\n";
    const auto array = build_runs_ooa(l, false);
    const auto report = verify_ooa(array);
    emit(o, out, [&](std::ostream& os) { write_ooa(os, array); });
    if (!report.passed()) {
        write_report(err, report, array);
        return verification_failed;
    }
    return ok;
}

int rts_ooa(const Options& o, std::ostream& out, std::ostream& err) {
    const auto array = build_rts_ooa(Field::of_order(o.q), o.t, false);
    const auto report = verify_ooa(array);
    emit(o, out, [&](std::ostream& os) { write_ooa(os, array); });
    if (!report.passed()) {
        write_report(err, report, array);
        return verification_failed;
    }
    return ok;
}

OoaArray with_lambda(OoaArray array, std::uint64_t lambda) {
    if (lambda == 0 || lambda == array.params().lambda) return array;
    auto p = array.params();
    p.lambda = lambda;
    try {
        return OoaArray(p, array.symbols());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--lambda: ") + e.what());
    }
}

CoverageReport census(const OoaArray& array) {
    if (array.params().lambda == 1 && GeneratorMatrix::of(array.symbols(), Field::of_order(array.params().v)))
        return coverage_ratio(array, CensusMethod::rank);
    return coverage_ratio(array, CensusMethod::brute_force);
}

bool all_tsets(const Options& o, bool default_all) {
    if (o.mode.empty()) return default_all;
    return o.mode == "all-tsets";
}

int verify(const Options& o, std::ostream& out) {
    const auto array = with_lambda(load_ooa(o), o.lambda);
    const auto report = all_tsets(o, false) ? census(array) : verify_ooa(array);
    write_report(out, report, array, !all_tsets(o, false));
    return report.passed() ? ok : verification_failed;
}

int coverage(const Options& o, std::ostream& out) {
    const auto array = with_lambda(load_ooa(o), o.lambda);
    const auto report = all_tsets(o, true) ? census(array) : verify_ooa(array);
    write_report(out, report, array, false);
    return ok;
}

int table1(const Options& o, std::ostream& out) {
    if (o.t < 3) throw UsageError("table1 needs --t >= 3");
    out << format_table1(table1_stats(o.q, o.t)) << '\n';
    return ok;
}

int hypergraph_check(const Options& o, std::ostream& out) {
    const auto l = make_lfsr(o);
    const unsigned t = l.degree();
    const std::uint32_t q = l.base().order();
    const auto H = build_H_tms(t, q + 1, t);
    const auto PI = build_PI(t - 1, q);
    const auto LI = build_LI(t, q);
    const auto f = runs_vertex_map(l, H, PI);
    const auto g = pi_to_li_map(PI, LI);
    const std::string h_name = "H(" + std::to_string(t) + "," + std::to_string(q + 1) + "," + std::to_string(t) + ")";
    const std::string pi_name = "PI(" + std::to_string(t - 1) + "," + std::to_string(q) + ")";
    const std::string li_name = "LI(" + std::to_string(t) + "," + std::to_string(q) + ")";

    bool pass = true;
    auto line = [&](const std::string& what, bool good) {
        out << what << ": " << (good ? "yes" : "no") << '\n';
        pass = pass && good;
    };
    const bool f_hom = is_homomorphism(H, PI, f);
    line(h_name + " -> " + pi_name + " homomorphism", f_hom);
    line(pi_name + " -> " + li_name + " homomorphism", is_homomorphism(PI, LI, g));
    const auto voa = subinterval_voa(l, PI);
    const auto voa_report = verify_voa(voa, PI, q, 1);
    out << "M over " << pi_name << ": " << voa_report.summary() << '\n';
    pass = pass && voa_report.passed();
    if (f_hom) {
        const auto pulled = pullback_voa(voa, PI, H, f);
        line("pullback equals RUNS array", pulled == build_runs_ooa(l, false).symbols());
        const auto report = verify_voa(pulled, H, q, 1);
        out << "pullback over " << h_name << ": " << report.summary() << '\n';
        pass = pass && report.passed();
    }
    if (!o.out.empty()) emit(o, out, [&](std::ostream& os) { write_vertex_map(os, f, H, PI); });
    return pass ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ordered orthogonal arrays from LFSR sequences", "ooalfsr"};
    app.require_subcommand(1);
    Options o;

    auto q_opt = [&](CLI::App* sub) { sub->add_option("--q", o.q, "field order (prime power)")->required(); };
    auto t_opt = [&](CLI::App* sub) {
        sub->add_option("--t", o.t, "degree / strength")->required()->check(CLI::Range(1u, 64u));
    };
    auto lfsr_opts = [&](CLI::App* sub) {
        q_opt(sub);
        t_opt(sub);
        sub->add_option("--poly", o.poly, "characteristic polynomial, constant term first (1,1,0,0,1)");
        sub->add_option("--seed", o.seed, "seed b_0..b_{t-1} (0,0,1 or 001); default impulse");
    };
    auto file_opts = [&](CLI::App* sub) {
        sub->add_option("--file", o.file, "OOA file (default stdin)");
        sub->add_option("--mode", o.mode, "left-justified or all-tsets")
            ->check(CLI::IsMember({"left-justified", "all-tsets"}));
        sub->add_option("--lambda", o.lambda, "override the declared index")->check(CLI::PositiveNumber);
    };

    auto* fi = app.add_subcommand("field-info", "print the canonical field of order q");
    q_opt(fi);
    auto* pp = app.add_subcommand("primitive-polys", "list primitive polynomials of degree t over F_q");
    q_opt(pp);
    t_opt(pp);
    auto* lf = app.add_subcommand("lfsr", "print one period of an LFSR sequence and its k_beta shifts");
    lfsr_opts(lf);
    auto* ro = app.add_subcommand("runs-ooa", "build the RUNS OOA(t, q+1, t, q)");
    lfsr_opts(ro);
    ro->add_option("--out", o.out, "output file (default stdout)");
    auto* rt = app.add_subcommand("rts-ooa", "build the Reed-Solomon OOA(t, q+1, t, q)");
    q_opt(rt);
    t_opt(rt);
    rt->add_option("--out", o.out, "output file (default stdout)");
    auto* ve = app.add_subcommand("verify", "check the OOA property (exit 1 on failure)");
    file_opts(ve);
    auto* co = app.add_subcommand("coverage", "count covered t-sets of columns");
    file_opts(co);
    auto* tb = app.add_subcommand("table1", "coverage statistics over all primitive polynomials");
    q_opt(tb);
    t_opt(tb);
    auto* hc = app.add_subcommand("hypergraph-check", "check the RUNS array as a pullback over PI(t-1,q)");
    lfsr_opts(hc);
    hc->add_option("--out", o.out, "write the vertex map H -> PI to this file");

    std::vector<std::string> argv_store{"ooalfsr"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        if (fi->parsed()) return field_info(o, out);
        if (pp->parsed()) return primitive_polys(o, out);
        if (lf->parsed()) return lfsr(o, out);
        if (ro->parsed()) return runs_ooa(o, out, err);
        if (rt->parsed()) return rts_ooa(o, out, err);
        if (ve->parsed()) return verify(o, out);
        if (co->parsed()) return coverage(o, out);
        if (tb->parsed()) return table1(o, out);
        if (hc->parsed()) return hypergraph_check(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::logic_error& e) {
        err << "verification failed: " << e.what() << '\n';
        return verification_failed;
    }
    return usage_error;
}

}  // namespace ooalfsr::cli
