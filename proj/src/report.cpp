#include "qclique/report.hpp"

#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace qclique {

namespace {

Engine engine_from_string(const std::string& s)
{
    if (s == "quantum") {
        return Engine::Quantum;
    }
    if (s == "molecular") {
        return Engine::Molecular;
    }
    if (s == "brute") {
        return Engine::Brute;
    }
    throw std::invalid_argument("unknown engine '" + s + "'");
}

void emit_text(std::ostream& out, const SolveReport& r)
{
    out << "engine: " << to_string(r.engine) << '\n';
    out << "graph: n=" << r.n << " edges=" << r.theta << " complement_edges=" << r.m << '\n';
    out << "clique size: " << r.clique_size << '\n';
    out << "witness:";
    for (int v : r.witness.vertices()) {
        out << ' ' << v;
    }
    out << '\n';
    if (!r.trace.empty()) {
        out << "trace:\n";
        for (const TraceEntry& t : r.trace) {
            out << "  w=" << t.w << " iterations=" << t.iterations << " marked=";
            if (t.marked) {
                out << *t.marked;
            } else {
                out << '?';
            }
            out << (t.accepted ? " accepted" : " rejected") << '\n';
        }
    }
    if (r.engine == Engine::Quantum) {
        const Resources& res = r.resources;
        out << "qubits: " << res.qubits << '\n';
        out << "gates per oracle call: NOT=" << res.not_count << " CNOT=" << res.cnot_count
            << " CCNOT=" << res.ccnot_count << '\n';
        out << "hadamard per search: " << res.hadamard
            << " (choice wires + kickback; the simulator prepares these states directly)\n";
        out << "oracle calls: " << res.oracle_calls << '\n';
        out << "seed: " << r.seed << '\n';
    } else if (r.engine == Engine::Molecular) {
        out << "seed: " << r.seed << '\n';
    }
    out << "time: " << std::fixed << std::setprecision(6) << r.wall_seconds << " s\n";
    out.unsetf(std::ios::floatfield);
}

} // namespace

nlohmann::ordered_json to_json(const SolveReport& r)
{
    nlohmann::ordered_json j;
    j["engine"] = to_string(r.engine);
    j["n"] = r.n;
    j["theta"] = r.theta;
    j["m"] = r.m;
    j["clique_size"] = r.clique_size;
    j["witness"] = r.witness.vertices();
    auto trace = nlohmann::ordered_json::array();
    for (const TraceEntry& t : r.trace) {
        nlohmann::ordered_json e;
        e["w"] = t.w;
        e["iterations"] = t.iterations;
        if (t.marked) {
            e["marked"] = *t.marked;
        } else {
            e["marked"] = -1;
        }
        e["accepted"] = t.accepted;
        trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);
    j["resources"] = {
        {"qubits", r.resources.qubits},     {"hadamard", r.resources.hadamard},
        {"not", r.resources.not_count},     {"cnot", r.resources.cnot_count},
        {"ccnot", r.resources.ccnot_count}, {"oracle_calls", r.resources.oracle_calls},
    };
    j["seed"] = r.seed;
    return j;
}

SolveReport report_from_json(const nlohmann::json& j)
{
    SolveReport r;
    r.engine = engine_from_string(j.at("engine").get<std::string>());
    r.n = j.at("n").get<int>();
    r.theta = j.at("theta").get<std::uint64_t>();
    r.m = j.at("m").get<std::uint64_t>();
    r.clique_size = j.at("clique_size").get<int>();
    r.witness = VertexSet::from_vertices(r.n, j.at("witness").get<std::vector<int>>());
    for (const auto& e : j.at("trace")) {
        TraceEntry t;
        t.w = e.at("w").get<int>();
        t.iterations = e.at("iterations").get<int>();
        const auto marked = e.at("marked").get<long long>();
        if (marked >= 0) {
            t.marked = static_cast<std::uint64_t>(marked);
        }
        t.accepted = e.at("accepted").get<bool>();
        r.trace.push_back(t);
    }
    const auto& res = j.at("resources");
    r.resources.qubits = res.at("qubits").get<std::uint64_t>();
    r.resources.hadamard = res.at("hadamard").get<std::uint64_t>();
    r.resources.not_count = res.at("not").get<std::uint64_t>();
    r.resources.cnot_count = res.at("cnot").get<std::uint64_t>();
    r.resources.ccnot_count = res.at("ccnot").get<std::uint64_t>();
    r.resources.oracle_calls = res.at("oracle_calls").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

void emit_report(std::ostream& out, const SolveReport& report, ReportFormat format)
{
    if (format == ReportFormat::Json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        emit_text(out, report);
    }
}

nlohmann::ordered_json to_json(const CrossValidation& all)
{
    nlohmann::ordered_json j;
    j["agree"] = all.agree;
    j["problems"] = all.problems;
    auto reports = nlohmann::ordered_json::array();
    for (const SolveReport& r : all.reports) {
        reports.push_back(to_json(r));
    }
    j["reports"] = std::move(reports);
    return j;
}

void emit_report(std::ostream& out, const CrossValidation& all, ReportFormat format)
{
    if (format == ReportFormat::Json) {
        out << to_json(all).dump(2) << '\n';
        return;
    }
    for (const SolveReport& r : all.reports) {
        emit_text(out, r);
        out << '\n';
    }
    out << "cross-check: " << (all.agree ? "all engines agree" : "MISMATCH") << '\n';
    for (const std::string& p : all.problems) {
        out << "  " << p << '\n';
    }
}

} // namespace qclique
