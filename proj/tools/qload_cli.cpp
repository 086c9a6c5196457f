// Copyright 2026 The qload Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qload: build, lower, simulate and account for the classical-bit loading
// circuit families. Exit codes: 0 success, 1 verification failure, 2 usage
// or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "qload/circuit_text.hpp"
#include "qload/codec.hpp"
#include "qload/diagnostics.hpp"
#include "qload/families.hpp"
#include "qload/passes.hpp"
#include "qload/pipeline.hpp"
#include "qload/resources.hpp"
#include "qload/sparse_state.hpp"

namespace {

using namespace qload;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    void print(std::ostream& os, const std::string& format) const {
        if (format == "csv") {
            for (std::size_t i = 0; i < headers.size(); ++i)
                os << headers[i] << (i + 1 < headers.size() ? "," : "\n");
            for (const auto& row : rows)
                for (std::size_t i = 0; i < row.size(); ++i)
                    os << row[i] << (i + 1 < row.size() ? "," : "\n");
            return;
        }
        if (format == "json") {
            json out = json::array();
            for (const auto& row : rows) {
                json obj;
                for (std::size_t i = 0; i < headers.size(); ++i) obj[headers[i]] = row[i];
                out.push_back(obj);
            }
            os << out.dump(2) << "\n";
            return;
        }
        std::vector<std::size_t> width(headers.size());
        for (std::size_t i = 0; i < headers.size(); ++i) width[i] = headers[i].size();
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        auto emit = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << row[i] << std::string(width[i] - row[i].size(), ' ');
                os << (i + 1 < row.size() ? "  " : "\n");
            }
        };
        emit(headers);
        for (const auto& row : rows) emit(row);
    }
};

std::string fam_label(int family, bool erasure) {
    return family == 2 ? (erasure ? "2e" : "2ne") : std::to_string(family);
}

BitVector bits_from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open bits file '" + path + "'");
    std::vector<int> bits;
    char byte;
    while (in.get(byte))
        for (int i = 7; i >= 0; --i) bits.push_back((static_cast<unsigned char>(byte) >> i) & 1);
    if (bits.empty()) throw UsageError("bits file '" + path + "' is empty");
    return BitVector(std::move(bits));
}

BitVector resolve_bits(const std::string& bits, const std::string& bits_file,
                       std::size_t random_len, unsigned seed) {
    const int sources = int(!bits.empty()) + int(!bits_file.empty()) + int(random_len > 0);
    if (sources != 1)
        throw UsageError("provide exactly one of --bits, --bits-file, --random-bits");
    if (!bits.empty()) return BitVector::parse(bits);
    if (!bits_file.empty()) return bits_from_file(bits_file);
    std::mt19937 rng(seed);
    std::vector<int> b(random_len);
    for (auto& v : b) v = static_cast<int>(rng() & 1u);
    return BitVector(std::move(b));
}

std::pair<int, bool> parse_family(const std::string& name) {
    if (name == "1") return {1, false};
    if (name == "2ne" || name == "2") return {2, false};
    if (name == "2e") return {2, true};
    if (name == "3") return {3, false};
    throw UsageError("unknown family '" + name + "' (expected 1, 2ne, 2e or 3)");
}

void report_rows(Table& t, const ResourceReport& r, const std::string& kind) {
    t.rows.push_back({r.family, kind, std::to_string(r.total_bits), std::to_string(r.address_bits),
                      std::to_string(r.counts[GateKind::CLX]),
                      std::to_string(r.counts[GateKind::H]),
                      std::to_string(r.counts[GateKind::CNOT]),
                      std::to_string(r.counts[GateKind::CCNOT]),
                      std::to_string(r.counts[GateKind::CSWAP]), std::to_string(r.slice_depth),
                      std::to_string(r.serialized_depth), std::to_string(r.final_state_qubits),
                      std::to_string(r.final_ancilla_qubits), std::to_string(r.final_total_qubits),
                      std::to_string(r.peak_total_qubits)});
}

Table report_table() {
    Table t;
    t.headers = {"family", "kind",  "N",     "n",     "CLX",   "H",
                 "CNOT",   "CCNOT", "CSWAP", "slice", "serial", "state",
                 "ancilla", "total", "peak"};
    return t;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Circuit apply_pass_list(const Circuit& c, const std::vector<std::string>& passes,
                        std::vector<PassReport>& reports) {
    Circuit cur = c;
    for (const auto& name : passes) {
        PassReport rep;
        if (name == "swap-to-cnot")
            cur = lower_swap_to_cnot(cur, &rep);
        else if (name == "cswap-three-toffoli")
            cur = lower_cswap(cur, CswapLowering::ThreeToffoli, &rep);
        else if (name == "cswap-sandwich")
            cur = lower_cswap(cur, CswapLowering::ToffoliSandwich, &rep);
        else if (name == "toffoli-phase")
            cur = lower_toffoli_phase(cur, &rep);
        else
            throw UsageError("unknown pass '" + name +
                             "' (swap-to-cnot, cswap-three-toffoli, cswap-sandwich, "
                             "toffoli-phase)");
        reports.push_back(rep);
    }
    return cur;
}

int cmd_build(const std::string& family_name, const std::string& bits_str,
              const std::string& bits_file, std::size_t random_len, unsigned seed,
              const std::string& passes, const std::string& out_path, const std::string& format) {
    const auto [family, erasure] = parse_family(family_name);
    const BitVector bits = resolve_bits(bits_str, bits_file, random_len, seed);
    LoadResult lr = build_family(family, bits, erasure);
    std::vector<PassReport> pass_reports;
    Circuit final_circuit = apply_pass_list(lr.circuit, split_list(passes), pass_reports);
    const auto violations = validate(final_circuit);
    if (!violations.empty()) {
        std::cerr << "internal error: built circuit failed validation\n";
        return kExitVerificationFailed;
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write '" + out_path + "'");
        write_circuit(out, final_circuit);
    } else {
        write_circuit(std::cout, final_circuit);
    }
    Table t = report_table();
    report_rows(t, empirical_report(lr), "measured");
    report_rows(t, formula_report(fam_label(family, erasure), lr.total_bits), "formula");
    if (!pass_reports.empty()) {
        // Lowering rewrites gates but not the register accounting.
        ResourceReport low = empirical_report(lr);
        low.counts = count_gates(final_circuit);
        low.counts[GateKind::CLX] -= lr.clx_resets;
        low.slice_depth = slice_depth(final_circuit) - lr.load_slices;
        low.serialized_depth = serialized_depth(final_circuit);
        report_rows(t, low, "lowered");
    }
    std::ostream& os = out_path.empty() ? std::cerr : std::cout;
    os << "qubits allocated: " << final_circuit.num_qubits << ", padding bits: " << lr.padding
       << ", pool: " << final_circuit.free_pool.size() << ", reset CLX (not in table): "
       << lr.clx_resets << "\n";
    os << "output register (msb first):";
    for (auto q : lr.output_qubits) os << ' ' << q;
    os << "\n";
    for (const auto& rep : pass_reports) {
        os << "pass " << rep.pass << ": rewrote " << rep.gates_rewritten << " gate(s)";
        if (!rep.note.empty()) os << "; " << rep.note;
        os << "\n";
    }
    t.print(os, format);
    return kExitOk;
}

int cmd_sim(const std::string& circuit_path, const std::string& initial, bool dump,
            const std::string& reg_spec, const std::string& assert_target) {
    std::ifstream in(circuit_path);
    if (!in) throw UsageError("cannot open circuit file '" + circuit_path + "'");
    Circuit c;
    try {
        c = parse_circuit(in);
    } catch (const ParseError& e) {
        std::cerr << circuit_path << ": " << e.what() << "\n";
        return kExitUsage;
    }
    BasisLabel init = BasisLabel::zeros(c.num_qubits);
    if (!initial.empty()) {
        const auto bits = BitVector::parse(initial);
        if (bits.size() != c.num_qubits)
            throw UsageError("--initial length does not match the circuit");
        init = BasisLabel(bits.bits);
    }
    SparseState s = run_sparse(c, init);
    if (dump && reg_spec.empty()) dump_state(std::cout, s.terms(), s.num_qubits());
    if (dump && !reg_spec.empty()) {
        // Marginal of the chosen register: junk traced out classically, so
        // the printed amplitudes are square roots of the label masses.
        std::vector<std::uint32_t> reg;
        for (const auto& tok : split_list(reg_spec)) {
            const long q = std::stol(tok);
            if (q < 0 || static_cast<std::uint32_t>(q) >= c.num_qubits)
                throw UsageError("--register index out of range");
            reg.push_back(static_cast<std::uint32_t>(q));
        }
        const auto mass = register_distribution(s.terms(), s.num_qubits(), reg);
        std::vector<SparseState::Term> marg;
        for (std::uint64_t l = 0; l < mass.size(); ++l)
            if (mass[l] > 0)
                marg.push_back({l, cplx{std::sqrt(mass[l]), 0.0}});
        dump_state(std::cout, marg, static_cast<std::uint32_t>(reg.size()));
    }
    if (!assert_target.empty()) {
        const auto colon = assert_target.find(':');
        if (colon == std::string::npos)
            throw UsageError("--assert-target expects FAMILY:BITS, e.g. 2ne:0110");
        const auto [family, erasure] = parse_family(assert_target.substr(0, colon));
        const BitVector bits = BitVector::parse(assert_target.substr(colon + 1));
        LoadResult ref = build_family(family, bits, erasure);
        if (ref.circuit.num_qubits > c.num_qubits)
            throw UsageError("circuit has fewer qubits than the family layout");
        if (ref.target_state.empty())
            throw UsageError("target register too large to materialize");
        const double f = marginal_fidelity(s.terms(), s.num_qubits(), ref.output_qubits,
                                           ref.target_state);
        std::cout << "fidelity " << std::setprecision(15) << f << "\n";
        if (f < 1.0 - 1e-12) {
            std::cerr << "assert-target failed: fidelity " << f << "\n";
            return kExitVerificationFailed;
        }
    }
    return kExitOk;
}

int cmd_resources(const std::string& family_name, std::size_t n_single, std::size_t n_max,
                  bool depth_mode, bool plot_log2log2, const std::string& format) {
    std::size_t lo = 1, hi = 0;
    if (n_single > 0 && n_max > 0) throw UsageError("give --n or --n-max, not both");
    if (n_single > 0) lo = hi = n_single;
    else if (n_max > 0) hi = n_max;
    else throw UsageError("give --n or --n-max");
    if (plot_log2log2) {
        // Two-column plot data: N against log2(log2(N)).
        std::cout << "N,log2log2N\n";
        for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%llu,%.6g\n",
                          static_cast<unsigned long long>(std::uint64_t{1} << n),
                          std::log2(static_cast<double>(n)));
            std::cout << buf;
        }
        return kExitOk;
    }
    if (depth_mode) {
        const std::string fam = family_name == "2" ? "2ne" : family_name;
        Table t;
        t.headers = {"N", "n", "slice", "serial", "formula", "formula_mirror", "log2log2N"};
        for (const auto& row : depth_scaling_table(fam, lo, hi)) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6g", row.log2log2);
            t.rows.push_back({std::to_string(row.n_bits), std::to_string(row.n),
                              std::to_string(row.slice_depth), std::to_string(row.serialized_depth),
                              std::to_string(row.formula), std::to_string(row.formula_with_mirror),
                              buf});
        }
        t.print(std::cout, format);
        return kExitOk;
    }
    const auto [family, erasure] = parse_family(family_name);
    Table t = report_table();
    for (std::size_t n = lo; n <= hi; ++n) {
        const std::size_t n_bits = std::size_t{1} << n;
        report_rows(t, formula_report(fam_label(family, erasure), n_bits), "formula");
    }
    t.print(std::cout, format);
    return kExitOk;
}

int cmd_entropy(double p, std::size_t n_block, bool curve, std::size_t points) {
    if (curve) {
        std::cout << "p,L\n";
        for (std::size_t i = 0; i <= points; ++i) {
            const double x = static_cast<double>(i) / static_cast<double>(points);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6g,%.6g\n", x, entropy_L(x));
            std::cout << buf;
        }
        return kExitOk;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "L = %.6g\n", entropy_L(p));
    std::cout << buf;
    if (n_block > 0) {
        const auto plan = savings(p, n_block);
        std::cout << "N = " << plan.N << ", M = " << plan.M << ", saved = " << plan.saved << "\n";
    }
    return kExitOk;
}

int cmd_verify_decomp(const std::string& gate) {
    Circuit ref, repl;
    if (gate == "swap-cnot3") {
        ref.num_qubits = repl.num_qubits = 2;
        ref.roles.assign(2, QubitRole::Data);
        ref.new_slice().gates.push_back(Gate(GateKind::SWAP, 0, 1));
        repl = lower_swap_to_cnot(ref);
    } else if (gate == "cswap-toffoli3" || gate == "cswap-sandwich") {
        ref.num_qubits = repl.num_qubits = 3;
        ref.roles.assign(3, QubitRole::Data);
        ref.new_slice().gates.push_back(Gate(GateKind::CSWAP, 0, 1, 2));
        repl = lower_cswap(ref, gate == "cswap-toffoli3" ? CswapLowering::ThreeToffoli
                                                     : CswapLowering::ToffoliSandwich);
    } else if (gate == "toffoli-phase") {
        ref.num_qubits = repl.num_qubits = 3;
        ref.roles.assign(3, QubitRole::Data);
        ref.new_slice().gates.push_back(Gate(GateKind::CCNOT, 0, 1, 2));
        repl = lower_toffoli_phase(ref);
    } else {
        throw UsageError("unknown gate '" + gate +
                         "' (swap-cnot3, cswap-toffoli3, cswap-sandwich, toffoli-phase)");
    }
    const auto verdict = compare_unitaries(unitary_of(repl), unitary_of(ref));
    std::cout << gate << ": " << verdict.describe() << "\n";
    return verdict.kind == EquivalenceKind::Differs ? kExitVerificationFailed : kExitOk;
}

int cmd_compress(double p, std::size_t n_block, std::size_t weight, const std::string& bits_str) {
    auto spec = enum_weight_spec(n_block, weight, p);
    const auto plan = savings(p, n_block);
    std::cout << "entropy L = " << plan.L << ", entropy-model M = " << plan.M
              << ", enumerative M = " << spec.code_len << "\n";
    if (!bits_str.empty()) {
        const auto word = BitVector::parse(bits_str);
        const auto code = encode(word, spec);
        std::cout << "codeword " << code.to_string() << "\n";
        std::cout << "decoded  " << decode(code, spec).to_string() << "\n";
    }
    return kExitOk;
}

int cmd_netlist(const std::string& path, const std::string& eval_bits, bool lower) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open netlist file '" + path + "'");
    Netlist nl;
    try {
        nl = parse_netlist(in);
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitUsage;
    }
    if (!eval_bits.empty()) {
        const auto bits = BitVector::parse(eval_bits);
        const auto out = nl.eval(bits.bits);
        std::cout << "eval ";
        for (int b : out) std::cout << b;
        std::cout << "\n";
    }
    if (lower) {
        auto [circuit, low] = lower_netlist_reversible(nl);
        write_circuit(std::cout, circuit);
        const auto rep = empirical_report(circuit);
        std::cout << "# ancillas added: " << low.report.ancillas_added
                  << ", gates: " << rep.counts.total()
                  << ", serialized depth: " << rep.serialized_depth << "\n";
        std::cout << "# output qubits:";
        for (auto q : low.output_qubits) std::cout << ' ' << q;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_pipeline(const std::string& spec_path, const std::string& bits_str) {
    std::ifstream in(spec_path);
    if (!in) throw UsageError("cannot open spec file '" + spec_path + "'");
    const CodecSpec spec = parse_codec_spec(in);
    const auto word = BitVector::parse(bits_str);
    const auto rep = run_pipeline(word, spec);
    std::cout << "codeword  " << rep.codeword.to_string() << "\n";
    std::cout << "recovered " << rep.recovered.to_string() << "\n";
    std::cout << "data qubits " << rep.data_qubits_loaded << " (vs " << rep.uncompressed_qubits
              << " uncompressed), ancillas " << rep.ancillas_added << ", entropy-model savings "
              << rep.plan.saved << "\n";
    std::cout << "decoder serialized depth " << rep.decoder_serialized_depth << " (log2 N = "
              << ceil_log2(rep.uncompressed_qubits) << ")\n";
    if (!rep.ok) {
        std::cerr << "pipeline failed to recover the input\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"data loading circuit compiler and exact simulator"};
    app.require_subcommand(1);

    std::string family = "2ne", bits, bits_file, out_path, passes, format = "table";
    std::size_t random_len = 0;
    unsigned seed = 1;
    auto* build = app.add_subcommand("build", "build a loader circuit and report resources");
    build->add_option("--family", family, "1, 2ne, 2e or 3")->required();
    build->add_option("--bits", bits, "ASCII bit string, msb first");
    build->add_option("--bits-file", bits_file, "raw binary file of bits");
    build->add_option("--random-bits", random_len, "generate this many random bits");
    build->add_option("--seed", seed, "seed for --random-bits");
    build->add_option("--passes", passes,
                      "comma list: swap-to-cnot, cswap-three-toffoli, cswap-sandwich, "
                      "toffoli-phase");
    build->add_option("--out", out_path, "write the circuit here instead of stdout");
    build->add_option("--format", format, "table, csv or json");

    std::string sim_circuit, sim_initial, sim_register, assert_target;
    bool dump = false;
    auto* sim = app.add_subcommand("sim", "run a circuit file on a basis input");
    sim->add_option("--circuit", sim_circuit, "circuit file")->required();
    sim->add_option("--initial", sim_initial, "initial basis bits (default all zero)");
    sim->add_flag("--dump", dump, "print nonzero amplitudes");
    sim->add_option("--register", sim_register,
                    "comma list of qubit indices: dump this register's marginal");
    sim->add_option("--assert-target", assert_target, "FAMILY:BITS loader target to verify");

    std::string res_family = "2ne";
    std::size_t res_n = 0, res_n_max = 0, ent_points = 100;
    bool depth_mode = false, plot_log2log2 = false, curve = false;
    auto* res = app.add_subcommand("resources", "closed-form resource tables");
    res->add_option("--family", res_family, "1, 2ne, 2e or 3")->required();
    res->add_option("--n", res_n, "single row at N = 2^n");
    res->add_option("--n-max", res_n_max, "rows for n = 1..K");
    res->add_flag("--depth", depth_mode, "measured depth scaling vs the closed-form tally");
    res->add_flag("--plot-log2log2", plot_log2log2, "two-column CSV of N vs log2(log2 N)");
    res->add_option("--format", format, "table, csv or json");

    double p = 0.5;
    std::size_t n_block = 0;
    auto* ent = app.add_subcommand("entropy", "binary entropy and compression savings");
    ent->add_option("--p", p, "probability of a 1 bit");
    ent->add_option("--n", n_block, "block length for the savings model");
    ent->add_flag("--curve", curve, "emit the (p, L) curve as CSV");
    ent->add_option("--points", ent_points, "curve resolution");

    std::string gate;
    auto* ver = app.add_subcommand("verify-decomp", "brute-force check a drawn decomposition");
    ver->add_option("--gate", gate, "swap-cnot3, cswap-toffoli3, cswap-sandwich, toffoli-phase")->required();

    double cp = 0.03;
    std::size_t cn = 0, cweight = 1;
    std::string cbits;
    auto* comp = app.add_subcommand("compress", "enumerative encode/decode a block");
    comp->add_option("--p", cp, "source parameter");
    comp->add_option("--n", cn, "block length")->required();
    comp->add_option("--weight", cweight, "weight bound");
    comp->add_option("--bits", cbits, "block to encode");

    std::string spec_path, pbits;
    auto* pipe = app.add_subcommand("pipeline", "compress, load, decompress, verify");
    pipe->add_option("--spec", spec_path, "codec spec file")->required();
    pipe->add_option("--bits", pbits, "input block")->required();

    std::string nl_path, nl_eval;
    bool nl_lower = false;
    auto* net = app.add_subcommand("netlist", "evaluate or lower a classical netlist");
    net->add_option("--file", nl_path, "netlist file")->required();
    net->add_option("--eval", nl_eval, "classical input bits to evaluate");
    net->add_flag("--lower", nl_lower, "emit the reversible circuit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (build->parsed())
            return cmd_build(family, bits, bits_file, random_len, seed, passes, out_path, format);
        if (sim->parsed())
            return cmd_sim(sim_circuit, sim_initial, dump, sim_register, assert_target);
        if (res->parsed())
            return cmd_resources(res_family, res_n, res_n_max, depth_mode, plot_log2log2, format);
        if (ent->parsed()) return cmd_entropy(p, n_block, curve, ent_points);
        if (ver->parsed()) return cmd_verify_decomp(gate);
        if (comp->parsed()) return cmd_compress(cp, cn, cweight, cbits);
        if (pipe->parsed()) return cmd_pipeline(spec_path, pbits);
        if (net->parsed()) return cmd_netlist(nl_path, nl_eval, nl_lower);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
