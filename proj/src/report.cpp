#include "graphlines/report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "graphlines/constructions.hpp"
#include "graphlines/dominance.hpp"
#include "graphlines/enumeration.hpp"
#include "graphlines/lines.hpp"
#include "graphlines/metric.hpp"
#include "graphlines/version.hpp"

namespace graphlines {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json config_json(const RunConfig& cfg) {
    return json{{"seed", cfg.seed},
                {"threads", cfg.threads},
                {"format", cfg.format},
                {"size_cap", cfg.size_cap},
                {"override_cap", cfg.override_cap}};
}

json report_skeleton(const std::string& command, const RunConfig& cfg, json arguments) {
    return json{{"command", command},
                {"config", config_json(cfg)},
                {"version", kVersion},
                {"arguments", std::move(arguments)}};
}

class Stopwatch {
public:
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_size_cap(const Graph& g, const RunConfig& cfg) {
    if (g.vertex_count() > cfg.size_cap && !cfg.override_cap)
        throw UsageError("graph has " + std::to_string(g.vertex_count()) +
                         " vertices, above the line-family cap of " +
                         std::to_string(cfg.size_cap) + " (pass the cap override to proceed)");
}

void require_connected(const Graph& g) {
    if (!g.connected())
        throw ConnectivityError("graph is disconnected; the graph metric is undefined");
}

json classification_json(const Classification& c) {
    return json{{"trivial_kind", to_string(c.trivial_kind)},
                {"geometric_dominant", c.geometric_dominant},
                {"strongly_geometric_dominant", c.strongly_geometric_dominant},
                {"super_geometric_dominant", c.super_geometric_dominant},
                {"has_universal_line", c.has_universal},
                {"diameter", c.diameter},
                {"distinct_lines", c.distinct_line_count}};
}

std::string graph6_or_empty(const Graph& g) {
    return g.vertex_count() <= 62 ? to_graph6(g) : std::string();
}

void write_graph_to(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + path);
    if (g.vertex_count() <= 62) {
        out << to_graph6(g) << "\n";
        return;
    }
    out << "# " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) out << u << " " << v << "\n";
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::vector<Graph> load_graph_file(const std::string& path) {
    const std::string text = read_file(path);
    // Edge-list files describe one graph; graph6 files hold one per line.
    bool edgeish = false;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line) && !edgeish) {
            if (line.empty() || line == ">>graph6<<") continue;
            edgeish = line.find('#') != std::string::npos ||
                      line.find_first_of(" \t") != std::string::npos;
            break;
        }
    }
    if (edgeish) return {parse_edge_list(text)};
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(path + ": line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) throw ParseError(path + ": no graphs found");
    return out;
}

CommandResult cmd_analyze(const std::string& input_path, const RunConfig& cfg) {
    Stopwatch clock;
    json rep = report_skeleton("analyze", cfg, json{{"input", input_path}});
    json items = json::array();
    for (const Graph& g : load_graph_file(input_path)) {
        check_size_cap(g, cfg);
        require_connected(g);
        const auto cls = classify(g, cfg.threads);
        const auto d = distance_matrix(g);
        const auto fam = line_family(d, cfg.threads);
        std::map<int, long> hist;
        for (const auto& ln : fam.lines) ++hist[ln.member_count];
        json hist_json = json::object();
        for (const auto& [size, count] : hist) hist_json[std::to_string(size)] = count;
        json twins = json::array();
        for (const auto& cls_vec : twin_partition(g).classes) twins.push_back(cls_vec);
        items.push_back(json{{"graph6", graph6_or_empty(g)},
                             {"n", g.vertex_count()},
                             {"edges", g.edge_count()},
                             {"classification", classification_json(cls)},
                             {"line_size_histogram", hist_json},
                             {"twin_classes", twins},
                             {"complement_edges", complement_edge_count(g)}});
    }
    rep["results"] = std::move(items);
    rep["duration_ms"] = clock.ms();

    CommandResult res;
    res.report = rep;
    if (cfg.format == "json") {
        res.rendered = render_json(rep);
    } else if (cfg.format == "text") {
        std::ostringstream t;
        for (const auto& item : rep["results"]) {
            t << item["n"].get<int>() << " vertices, " << item["edges"].get<long>() << " edges"
              << (item["graph6"].get<std::string>().empty()
                      ? ""
                      : " (" + item["graph6"].get<std::string>() + ")")
              << "\n";
            const auto& c = item["classification"];
            t << "  trivial_kind=" << c["trivial_kind"].get<std::string>()
              << " GD=" << c["geometric_dominant"].get<bool>()
              << " SGD=" << c["strongly_geometric_dominant"].get<bool>()
              << " super=" << c["super_geometric_dominant"].get<bool>()
              << " universal=" << c["has_universal_line"].get<bool>()
              << " diameter=" << c["diameter"].get<int>()
              << " lines=" << c["distinct_lines"].get<int>() << "\n";
            t << "  line sizes:";
            for (auto it = item["line_size_histogram"].begin();
                 it != item["line_size_histogram"].end(); ++it)
                t << " " << it.key() << "x" << it.value().get<long>();
            t << "\n  twin classes: " << item["twin_classes"].dump()
              << "\n  complement edges: " << item["complement_edges"].get<long>() << "\n";
        }
        res.rendered = t.str();
    } else {
        throw UsageError("analyze supports --format json|text");
    }
    return res;
}

CommandResult cmd_audit(const std::string& input_path, const RunConfig& cfg) {
    Stopwatch clock;
    json rep = report_skeleton("audit", cfg, json{{"input", input_path}});
    bool any_fail = false;
    json items = json::array();
    for (const Graph& g : load_graph_file(input_path)) {
        check_size_cap(g, cfg);
        require_connected(g);
        const AuditReport audit_rep = audit(g, nullptr, cfg.threads);
        json checks = json::array();
        for (const auto& c : audit_rep.checks) {
            json cj{{"name", c.name},
                    {"status", to_string(c.status)},
                    {"instances", c.instances}};
            if (c.status == AuditStatus::fail) cj["witness"] = c.witness;
            checks.push_back(std::move(cj));
        }
        any_fail = any_fail || !audit_rep.all_ok();
        items.push_back(json{{"graph6", graph6_or_empty(g)},
                             {"n", g.vertex_count()},
                             {"nontrivial_geometric_dominant", audit_rep.nontrivial_geometric_dominant},
                             {"checks", std::move(checks)}});
    }
    rep["results"] = std::move(items);
    rep["all_passed"] = !any_fail;
    rep["duration_ms"] = clock.ms();

    CommandResult res;
    res.exit_code = any_fail ? 1 : 0;
    res.report = rep;
    if (cfg.format == "json") {
        res.rendered = render_json(rep);
    } else if (cfg.format == "text") {
        std::ostringstream t;
        for (const auto& item : rep["results"]) {
            t << item["n"].get<int>() << " vertices"
              << (item["nontrivial_geometric_dominant"].get<bool>()
                      ? " (non-trivial geometric dominant)"
                      : "")
              << "\n";
            for (const auto& c : item["checks"]) {
                t << "  " << c["name"].get<std::string>() << ": "
                  << c["status"].get<std::string>() << " (" << c["instances"].get<long>()
                  << " instances)";
                if (c.contains("witness")) t << " -- " << c["witness"].get<std::string>();
                t << "\n";
            }
        }
        t << (any_fail ? "FAIL\n" : "OK\n");
        res.rendered = t.str();
    } else {
        throw UsageError("audit supports --format json|text");
    }
    return res;
}

CommandResult cmd_search(const SearchOptions& opt, const RunConfig& cfg) {
    Stopwatch clock;
    json args{{"order", opt.order},   {"stream", opt.stream_path}, {"dedup", opt.dedup},
              {"sweep", opt.sweep},   {"max_n", opt.max_n},        {"out", opt.out_path}};
    json rep = report_skeleton("search", cfg, std::move(args));

    SearchResult sr = [&] {
        if (!opt.stream_path.empty()) {
            std::ifstream in(opt.stream_path, std::ios::binary);
            if (!in) throw ParseError("cannot open stream: " + opt.stream_path);
            return find_nontrivial_gd_stream(in, opt.dedup, cfg.threads);
        }
        if (opt.order < 1)
            throw UsageError("search needs --order within 1..9 or an external --stream");
        return find_nontrivial_gd(opt.order, cfg.threads);
    }();

    json witnesses = json::array();
    for (const auto& w : sr.witnesses)
        witnesses.push_back(json{{"graph6", w.g6},
                                 {"distinct_lines", w.cls.distinct_line_count},
                                 {"diameter", w.cls.diameter},
                                 {"super_geometric_dominant", w.cls.super_geometric_dominant}});
    rep["results"] = json{{"order", sr.order},
                          {"graphs_scanned", sr.graphs_scanned},
                          {"witness_count", sr.witnesses.size()},
                          {"witnesses", std::move(witnesses)},
                          {"g_min", sr.g_min ? json(*sr.g_min) : json(nullptr)}};

    if (opt.sweep) {
        if (!opt.stream_path.empty())
            throw UsageError("--sweep runs over the built-in enumeration, not a stream");
        const int bound = opt.max_n > 0 ? opt.max_n : opt.order;
        const SweepResult sw = sweep_open_questions(bound, cfg.threads);
        json orders = json::array();
        for (const auto& o : sw.orders) {
            orders.push_back(json{{"order", o.order},
                                  {"classes", o.classes},
                                  {"nontrivial_gd", o.nontrivial_gd_count},
                                  {"witnesses", o.witness_g6},
                                  {"witness_diameters", o.witness_diameters},
                                  {"g_min", o.g_min ? json(*o.g_min) : json(nullptr)},
                                  {"all_witnesses_diameter2", o.all_witnesses_diameter2},
                                  {"super_count", o.super_count},
                                  {"super_examples", o.super_g6},
                                  {"chen_chvatal_violations", o.chen_chvatal_violations}});
        }
        rep["sweep"] = std::move(orders);
    }
    rep["duration_ms"] = clock.ms();

    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw UsageError("cannot open output file: " + opt.out_path);
        for (const auto& w : sr.witnesses) out << w.g6 << "\n";
    }

    CommandResult res;
    res.report = rep;
    if (cfg.format == "json") {
        res.rendered = render_json(rep);
    } else if (cfg.format == "csv") {
        std::ostringstream t;
        t << "order,graphs_scanned,witness,graph6,distinct_lines,diameter,g_min\n";
        const auto& r = rep["results"];
        if (sr.witnesses.empty()) {
            t << r["order"].get<int>() << "," << r["graphs_scanned"].get<long>() << ",,,,,"
              << "\n";
        } else {
            for (size_t i = 0; i < sr.witnesses.size(); ++i)
                t << r["order"].get<int>() << "," << r["graphs_scanned"].get<long>() << "," << i
                  << "," << sr.witnesses[i].g6 << "," << sr.witnesses[i].cls.distinct_line_count
                  << "," << sr.witnesses[i].cls.diameter << "," << *sr.g_min << "\n";
        }
        if (rep.contains("sweep")) {
            t << "order,classes,nontrivial_gd,g_min,super_count,chen_chvatal_violations,"
                 "all_witnesses_diameter2\n";
            for (const auto& o : rep["sweep"])
                t << o["order"].get<int>() << "," << o["classes"].get<long>() << ","
                  << o["nontrivial_gd"].get<long>() << ","
                  << (o["g_min"].is_null() ? "" : std::to_string(o["g_min"].get<long>())) << ","
                  << o["super_count"].get<long>() << ","
                  << o["chen_chvatal_violations"].get<long>() << ","
                  << o["all_witnesses_diameter2"].get<bool>() << "\n";
        }
        res.rendered = t.str();
    } else if (cfg.format == "text") {
        std::ostringstream t;
        t << "order " << sr.order << ": scanned " << sr.graphs_scanned << " classes, "
          << sr.witnesses.size() << " non-trivial geometric dominant";
        if (sr.g_min) t << ", g_min=" << *sr.g_min;
        t << "\n";
        for (const auto& w : sr.witnesses)
            t << "  " << w.g6 << " lines=" << w.cls.distinct_line_count
              << " diameter=" << w.cls.diameter << "\n";
        if (rep.contains("sweep"))
            for (const auto& o : rep["sweep"])
                t << "sweep n=" << o["order"].get<int>() << ": classes="
                  << o["classes"].get<long>() << " ntGD=" << o["nontrivial_gd"].get<long>()
                  << " super=" << o["super_count"].get<long>()
                  << " cc_violations=" << o["chen_chvatal_violations"].get<long>() << "\n";
        res.rendered = t.str();
    } else {
        throw UsageError("search supports --format json|csv|text");
    }
    return res;
}

CommandResult cmd_explode(const ExplodeOptions& opt, const RunConfig& cfg) {
    Stopwatch clock;
    json rep = report_skeleton(
        "explode", cfg, json{{"input", opt.input_path}, {"t", opt.t}, {"out", opt.out_path}});
    const auto graphs = load_graph_file(opt.input_path);
    if (graphs.size() != 1) throw UsageError("explode expects exactly one input graph");
    const Graph& base = graphs[0];
    require_connected(base);

    const ExplodedGraph e = explode(base, opt.t);
    check_size_cap(e.result, cfg);
    json results{{"base_graph6", graph6_or_empty(base)},
                 {"base_n", base.vertex_count()},
                 {"base_edges", base.edge_count()},
                 {"t", opt.t},
                 {"result_n", e.result.vertex_count()},
                 {"result_edges", e.result.edge_count()},
                 {"result_graph6", graph6_or_empty(e.result)}};

    bool structure_failed = false;
    const int base_diam = diameter(base);
    results["base_diameter"] = base_diam;
    if (opt.t >= 3) {
        results["formula_lines"] =
            explode_line_count(base.vertex_count(), base.edge_count(), opt.t);
        const auto fam = line_family(distance_matrix(e.result), cfg.threads);
        results["brute_force_lines"] = fam.distinct_count();
        results["count_matches"] =
            results["formula_lines"].get<long>() == fam.distinct_count();
        if (base_diam <= 2) {
            const auto sc = explode_line_structure_check(e, cfg.threads);
            json scj{{"ok", sc.ok}, {"pairs_checked", sc.pairs_checked}};
            if (!sc.ok) scj["witness"] = sc.witness;
            results["structure_check"] = std::move(scj);
            structure_failed = !sc.ok;
        } else {
            results["structure_check"] = "skipped: base diameter above 2";
        }
    } else {
        results["structure_check"] = "skipped: t below 3";
    }
    rep["results"] = std::move(results);
    rep["duration_ms"] = clock.ms();

    if (!opt.out_path.empty()) write_graph_to(e.result, opt.out_path);

    CommandResult res;
    res.exit_code = structure_failed ? 1 : 0;
    res.report = rep;
    if (cfg.format == "json") {
        res.rendered = render_json(rep);
    } else if (cfg.format == "text") {
        std::ostringstream t;
        const auto& r = rep["results"];
        t << "exploded " << r["base_n"].get<int>() << " vertices x t=" << opt.t << " -> "
          << r["result_n"].get<int>() << " vertices, " << r["result_edges"].get<long>()
          << " edges\n";
        if (r.contains("formula_lines"))
            t << "lines: formula " << r["formula_lines"].get<long>() << " vs brute force "
              << r["brute_force_lines"].get<long>()
              << (r["count_matches"].get<bool>() ? " (match)" : " (MISMATCH)") << "\n";
        if (r["structure_check"].is_object())
            t << "structure check: "
              << (r["structure_check"]["ok"].get<bool>() ? "ok" : "FAILED") << " over "
              << r["structure_check"]["pairs_checked"].get<long>() << " pairs\n";
        res.rendered = t.str();
    } else {
        throw UsageError("explode supports --format json|text");
    }
    return res;
}

CommandResult cmd_sample(const SampleOptions& opt, const RunConfig& cfg) {
    Stopwatch clock;
    json rep = report_skeleton("sample", cfg,
                               json{{"kind", opt.kind},
                                    {"n", opt.n},
                                    {"p", opt.p},
                                    {"t", opt.t},
                                    {"c0", opt.c0},
                                    {"attempts", opt.attempts},
                                    {"out", opt.out_path}});
    json results;
    int exit_code = 0;

    if (opt.kind == "gnp") {
        const Graph g = sample_gnp(opt.n, opt.p, cfg.seed);
        results = json{{"n", opt.n},
                       {"p", opt.p},
                       {"edges", g.edge_count()},
                       {"connected", g.connected()},
                       {"graph6", graph6_or_empty(g)}};
        if (!opt.out_path.empty()) write_graph_to(g, opt.out_path);
    } else if (opt.kind == "leftclique") {
        const int t = opt.t > 0
                          ? opt.t
                          : static_cast<int>(std::ceil(opt.c0 * std::log(static_cast<double>(opt.n))));
        LeftCliqueConfig lc{opt.n, t, cfg.seed};
        check_size_cap(Graph(std::max(opt.n, 1)), cfg);

        // Every draw misses edges only inside L and between L and R.
        const long bound = static_cast<long>(t) * (t - 1) / 2 +
                           static_cast<long>(t) * (opt.n - t);
        long max_missing = 0;
        for (int a = 1; a <= opt.attempts; ++a)
            max_missing = std::max(max_missing, complement_edge_count(left_clique_draw(lc, a)));

        SamplerProfile profile;
        const SamplerOutcome out = sample_left_clique(lc, opt.attempts, cfg.threads, &profile);
        auto histogram = [](const std::vector<int>& conds) {
            json h{{"accepted", 0}, {"1", 0}, {"2", 0}, {"3", 0}, {"4", 0}};
            for (int c : conds) h[c == 0 ? "accepted" : std::to_string(c)] =
                h[c == 0 ? "accepted" : std::to_string(c)].get<int>() + 1;
            return h;
        };
        results = json{
            {"n", opt.n},
            {"t", t},
            {"attempts", opt.attempts},
            {"accepted", out.accepted},
            {"attempts_used", out.attempts_used},
            {"failed_condition", out.failed_condition ? json(*out.failed_condition) : json(nullptr)},
            {"acceptance_rate", static_cast<double>(profile.accepted_count) / opt.attempts},
            {"profile_literal", histogram(profile.failed_condition_literal)},
            {"profile_strict_distinct", histogram(profile.failed_condition_strict)},
            {"complement_edge_bound", bound},
            {"complement_edges_max_observed", max_missing},
            {"complement_bound_respected", max_missing <= bound}};
        if (max_missing > bound) exit_code = 1;  // cannot happen by construction
        if (!opt.out_path.empty()) write_graph_to(out.graph, opt.out_path);
    } else {
        throw UsageError("sample kind must be gnp or leftclique");
    }
    rep["results"] = std::move(results);
    rep["duration_ms"] = clock.ms();

    CommandResult res;
    res.exit_code = exit_code;
    res.report = rep;
    if (cfg.format == "json") {
        res.rendered = render_json(rep);
    } else if (cfg.format == "text") {
        std::ostringstream t;
        const auto& r = rep["results"];
        if (opt.kind == "gnp") {
            t << "G(n,p) sample: n=" << opt.n << " p=" << opt.p << " seed=" << cfg.seed << " -> "
              << r["edges"].get<long>() << " edges\n";
        } else {
            t << "left-clique sample: n=" << opt.n << " t=" << r["t"].get<int>()
              << " seed=" << cfg.seed << " attempts=" << opt.attempts << "\n"
              << "accepted=" << r["accepted"].get<bool>()
              << " attempts_used=" << r["attempts_used"].get<int>()
              << " acceptance_rate=" << r["acceptance_rate"].get<double>() << "\n"
              << "complement edges: max " << r["complement_edges_max_observed"].get<long>()
              << " of allowed " << r["complement_edge_bound"].get<long>() << "\n";
        }
        res.rendered = t.str();
    } else {
        throw UsageError("sample supports --format json|text");
    }
    return res;
}

}  // namespace graphlines
