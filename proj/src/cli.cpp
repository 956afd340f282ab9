#include "loopfloer/cli.hpp"

#include "loopfloer/detection.hpp"
#include "loopfloer/errors.hpp"
#include "loopfloer/gluing.hpp"
#include "loopfloer/oracle.hpp"
#include "loopfloer/plumbing.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace loopfloer::cli {

namespace {

using nlohmann::json;

struct Output {
    json data;
    std::string text;
};

json loops_json(const std::vector<Loop>& loops) {
    json arr = json::array();
    for (const Loop& l : loops) arr.push_back(format_word(display_word(l)));
    return arr;
}

json slope_set_json(const SlopeSet& s) {
    json j;
    switch (s.kind()) {
    case SlopeSet::Kind::Empty: j["kind"] = "Empty"; break;
    case SlopeSet::Kind::All: j["kind"] = "All"; break;
    case SlopeSet::Kind::AllExcept:
        j["kind"] = "AllExcept";
        j["point"] = s.point().str();
        break;
    case SlopeSet::Kind::ClosedArc:
        j["kind"] = "ClosedArc";
        j["from"] = s.from().str();
        j["to"] = s.to().str();
        break;
    }
    j["sweep_depth"] = s.sweep_depth();
    j["text"] = s.str();
    return j;
}

std::string slope_set_text(const SlopeSet& s) {
    std::string t = s.str();
    if (s.sweep_depth() >= 0) t += " sweep_depth=" + std::to_string(s.sweep_depth());
    return t;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void oracle_mismatch(const std::string& what) {
    throw DomainError("oracle_mismatch", "oracle disagrees: " + what);
}

void check_fill(const std::vector<Loop>& loops, const Slope& s, const FillingResult& fast) {
    FillingResult slow = fill_oracle(loops, s);
    if (slow.dim != fast.dim || slow.is_lspace != fast.is_lspace) {
        oracle_mismatch("filling at " + s.str() + ": fast dim " + std::to_string(fast.dim) +
                        ", oracle dim " + std::to_string(slow.dim));
    }
}

Output run_cfd(const std::string& arg, bool oracle) {
    std::vector<Loop> loops = cfd(parse_tree(read_input(arg)));
    if (oracle) {
        for (const Slope& s : {Slope::infinity(), Slope(0, 1)}) check_fill(loops, s, fill(loops, s));
    }
    return {json{{"loops", loops_json(loops)}}, format_loops(loops)};
}

Output run_hf(const std::string& arg, bool oracle) {
    ClosedResult r = hf_dim_closed(parse_tree(read_input(arg)));
    if (oracle) {
        FillingResult f;
        f.dim = r.dim;
        f.is_lspace = r.is_lspace;
        check_fill(r.bordered, Slope(0, 1), f);
    }
    json j{{"dim", r.dim},
           {"lspace", r.is_lspace},
           {"attach_vertex", r.attach_vertex},
           {"bordered", loops_json(r.bordered)}};
    return {j, "dim=" + std::to_string(r.dim) + " lspace=" + yes_no(r.is_lspace)};
}

Output run_fill(const std::string& arg, const std::string& slope_text, bool oracle) {
    std::vector<Loop> loops = parse_loops(read_input(arg));
    Slope s = Slope::parse(slope_text);
    FillingResult f = fill(loops, s);
    if (oracle) check_fill(loops, s, f);
    json per = json::array();
    for (const LoopFilling& lf : f.per_loop) per.push_back({{"dim", lf.dim}, {"chi", lf.chi}});
    json j{{"dim", f.dim}, {"chi", f.chi_abs}, {"lspace", f.is_lspace}, {"per_loop", per}};
    return {j, "dim=" + std::to_string(f.dim) + " chi=" + std::to_string(f.chi_abs) +
                   " lspace=" + yes_no(f.is_lspace)};
}

Output run_interval(const std::string& arg, bool oracle) {
    std::vector<Loop> loops = parse_loops(read_input(arg));
    SlopeSet set = lspace_interval(loops);
    if (oracle) {
        for (const Slope& s : stern_brocot_slopes(3)) {
            bool slow = fill_oracle(loops, s).is_lspace;
            if (slow != set.contains(s)) oracle_mismatch("membership of " + s.str() + " in " + set.str());
        }
    }
    return {slope_set_json(set), slope_set_text(set)};
}

Output run_glue(const std::string& a, const std::string& b, bool oracle) {
    std::vector<Loop> l1 = parse_loops(read_input(a));
    std::vector<Loop> l2 = parse_loops(read_input(b));
    bool result = glue_is_lspace(l1, l2);
    if (oracle && pair_is_lspace(l1, l2) != result) oracle_mismatch("gluing");
    return {json{{"lspace", result}}, yes_no(result)};
}

Output run_dualize(const std::string& arg, bool oracle) {
    json arr = json::array();
    std::string text;
    for (const Word& w : parse_words(read_input(arg))) {
        Word d = presentation_word(dualize(w));
        if (oracle && word_to_graph(d).canonical_form() != word_to_graph(w).canonical_form()) {
            oracle_mismatch("dual word of " + format_word(w));
        }
        arr.push_back(format_word(d));
        if (!text.empty()) text += " | ";
        text += format_word(d);
    }
    return {json{{"loops", arr}}, text};
}

Output run_twist(const std::string& arg, const std::string& op, int power, bool oracle) {
    std::vector<Loop> loops = parse_loops(read_input(arg));
    TwistWord w;
    if (op == "tw") w.tw(power);
    else if (op == "du") w.du(power);
    else if (op == "ex") {
        for (int i = 0; i < std::abs(power); ++i) w.ex();
        if (power < 0) w = w.inverse();
    } else {
        throw DomainError("unknown_operation", "unknown twist operation " + op);
    }
    std::vector<Loop> out;
    for (const Loop& l : loops) out.push_back(op == "ex" && power == 1 ? ex(l) : w.apply(l));
    if (oracle) {
        Slope source = w.inverse().act(Slope::infinity());
        FillingResult slow = fill_oracle(loops, source);
        FillingResult fast = fill_oracle(out, Slope::infinity());
        if (slow.dim != fast.dim) oracle_mismatch("twisted filling");
    }
    return {json{{"loops", loops_json(out)}}, format_loops(out)};
}

struct CensusRow {
    int t = 0;
    std::vector<Loop> loops;
    std::string longitude;
    SlopeSet interval = SlopeSet::empty();
};

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("invalid range '" + text + "'");
    }
}

Output run_census(const std::string& family, const std::string& range, bool oracle) {
    if (family != "nt") throw DomainError("unknown_family", "unknown census family " + family);
    auto [lo, hi] = parse_range(range);
    if (lo > hi) throw ParseError("empty range '" + range + "'");
    std::vector<CensusRow> rows(static_cast<std::size_t>(hi - lo + 1));
    std::vector<std::string> errors(rows.size());

    auto work = [&](std::size_t i) {
        try {
            CensusRow& row = rows[i];
            row.t = lo + static_cast<int>(i);
            row.loops = cfd(n_t_tree(row.t));
            auto lon = rational_longitude(row.loops.front());
            row.longitude = lon ? lon->str() : "none";
            row.interval = lspace_interval(row.loops);
            if (oracle) {
                for (const Slope& s : stern_brocot_slopes(2)) {
                    if (fill_oracle(row.loops, s).is_lspace != row.interval.contains(s)) {
                        oracle_mismatch("census row t=" + std::to_string(row.t) + " at " + s.str());
                    }
                }
            }
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };
    unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(rows.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < rows.size(); i += workers) work(i);
        });
    }
    for (std::thread& th : pool) th.join();
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!errors[i].empty()) throw DomainError("census_failed", errors[i]);
    }

    json arr = json::array();
    std::ostringstream text;
    text << std::left << std::setw(4) << "t" << std::setw(7) << "count" << std::setw(11) << "longitude"
         << std::setw(22) << "interval" << "loops";
    for (const CensusRow& row : rows) {
        arr.push_back({{"t", row.t},
                       {"count", row.loops.size()},
                       {"longitude", row.longitude},
                       {"interval", row.interval.str()},
                       {"loops", loops_json(row.loops)}});
        text << '\n'
             << std::setw(4) << row.t << std::setw(7) << row.loops.size() << std::setw(11) << row.longitude
             << std::setw(22) << row.interval.str() << format_loops(row.loops);
    }
    return {json{{"family", family}, {"rows", arr}}, text.str()};
}

} // namespace

std::string read_input(const std::string& arg) {
    std::error_code ec;
    if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

unsigned worker_count() {
    if (const char* env = std::getenv("LOOPFLOER_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Loop calculus for bordered Floer invariants of manifolds with torus boundary",
                 "loopfloer"};
    app.require_subcommand(1);
    app.fallthrough();
    bool oracle = false;
    std::string format = "text";
    app.add_flag("--oracle", oracle, "Recompute every answer with the pairing oracle");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string a;
    std::string b;
    std::string op;
    int power = 1;
    std::string family = "nt";
    std::string range = "2..6";

    auto* cfd_cmd = app.add_subcommand("cfd", "Bordered invariant of a plumbing tree with boundary");
    cfd_cmd->add_option("tree", a, "Tree file or inline tree text")->required();
    auto* hf_cmd = app.add_subcommand("hf", "HF-hat dimension of a closed plumbing tree");
    hf_cmd->add_option("tree", a, "Tree file or inline tree text")->required();
    auto* fill_cmd = app.add_subcommand("fill", "Dehn filling of loops along a slope");
    fill_cmd->add_option("loops", a, "Loops file or inline loops")->required();
    fill_cmd->add_option("slope", b, "Slope p/q, n or inf")->required();
    auto* interval_cmd = app.add_subcommand("interval", "L-space slopes of loops");
    interval_cmd->add_option("loops", a, "Loops file or inline loops")->required();
    auto* glue_cmd = app.add_subcommand("glue", "Whether gluing two invariants gives an L-space");
    glue_cmd->add_option("first", a, "Loops of the first side")->required();
    glue_cmd->add_option("second", b, "Loops of the second side")->required();
    auto* dualize_cmd = app.add_subcommand("dualize", "Rewrite loops in the other alphabet");
    dualize_cmd->add_option("loops", a, "Loops file or inline loops")->required();
    auto* twist_cmd = app.add_subcommand("twist", "Apply tw, du or ex to loops");
    twist_cmd->add_option("loops", a, "Loops file or inline loops")->required();
    twist_cmd->add_option("op", op, "tw, du or ex")
        ->required()
        ->check(CLI::IsMember({"tw", "du", "ex"}));
    twist_cmd->add_option("-n,--power", power, "Exponent");
    auto* census_cmd = app.add_subcommand("census", "Tabulate a family of manifolds");
    census_cmd->add_option("--family", family, "Family name")->check(CLI::IsMember({"nt"}));
    census_cmd->add_option("--range", range, "Parameter range lo..hi");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    bool json_out = format == "json";
    try {
        Output result;
        if (cfd_cmd->parsed()) result = run_cfd(a, oracle);
        else if (hf_cmd->parsed()) result = run_hf(a, oracle);
        else if (fill_cmd->parsed()) result = run_fill(a, b, oracle);
        else if (interval_cmd->parsed()) result = run_interval(a, oracle);
        else if (glue_cmd->parsed()) result = run_glue(a, b, oracle);
        else if (dualize_cmd->parsed()) result = run_dualize(a, oracle);
        else if (twist_cmd->parsed()) result = run_twist(a, op, power, oracle);
        else result = run_census(family, range, oracle);
        if (json_out) out << result.data.dump() << '\n';
        else out << result.text << '\n';
        return 0;
    } catch (const DomainError& e) {
        if (json_out) out << json{{"error", e.reason()}, {"message", e.what()}}.dump() << '\n';
        err << "error[" << e.reason() << "]: " << e.what() << '\n';
        return 1;
    }
}

} // namespace loopfloer::cli
