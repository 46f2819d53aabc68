#include "kawt/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "kawt/parser.hpp"

namespace kawt {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

std::string strip_comment(const std::string& line) {
    std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

} // namespace

ProgramFile load_program_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> programs, booleans, weightings;
    std::string line;
    int lineno = 0;
    bool separated = false;
    std::string body;
    while (std::getline(in, line)) {
        ++lineno;
        if (separated) {
            body += line;
            body += '\n';
            continue;
        }
        std::string bare = strip_comment(line);
        std::vector<std::string> ws = words(bare);
        if (ws.empty()) continue;
        if (ws[0] == "---") {
            separated = true;
            continue;
        }
        std::vector<std::string>* target = nullptr;
        if (ws[0] == "program") target = &programs;
        else if (ws[0] == "bool") target = &booleans;
        else if (ws[0] == "weight") target = &weightings;
        else
            throw IoError(path + ":" + std::to_string(lineno) +
                          ": expected 'program', 'bool', 'weight' or '---', got '" +
                          ws[0] + "'");
        target->insert(target->end(), ws.begin() + 1, ws.end());
    }
    if (!separated)
        throw IoError(path + ": missing '---' separator before the program text");

    ProgramFile pf{Signature(programs, booleans, weightings), nullptr};
    pf.prog = parse_program(body, pf.sig);
    return pf;
}

TransitionSystem load_model_file(const std::string& path, const Signature& sig) {
    std::istringstream in(read_file(path));
    std::string line;
    int lineno = 0;

    const Semiring* ring = nullptr;
    std::vector<std::string> states;
    // Deferred labelings, applied once the system exists.
    struct ProgLine { int var; std::vector<std::pair<int, int>> edges; };
    struct BoolLine { int var; std::vector<int> states; };
    struct WeightLine { int var; Value v; };
    std::vector<ProgLine> prog_lines;
    std::vector<BoolLine> bool_lines;
    std::vector<WeightLine> weight_lines;
    std::vector<char> seen_prog(sig.programs().size(), 0);
    std::vector<char> seen_bool(sig.booleans().size(), 0);
    std::vector<char> seen_weight(sig.weightings().size(), 0);

    auto fail = [&](const std::string& msg) -> void {
        throw IoError(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    auto state_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (states[i] == name) return int(i);
        fail("unknown state '" + name + "'");
        return -1;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> ws = words(strip_comment(line));
        if (ws.empty()) continue;
        const std::string& kind = ws[0];
        if (kind == "semiring") {
            if (ws.size() != 2) fail("expected: semiring <name>");
            ring = find_semiring(ws[1]);
            if (!ring) fail("unknown semiring '" + ws[1] + "'");
        } else if (kind == "states") {
            if (ws.size() < 2) fail("a model needs at least one state");
            states.assign(ws.begin() + 1, ws.end());
            for (std::size_t i = 0; i < states.size(); ++i)
                for (std::size_t j = i + 1; j < states.size(); ++j)
                    if (states[i] == states[j]) fail("duplicate state '" + states[i] + "'");
        } else if (kind == "prog" || kind == "bool") {
            if (states.empty()) fail("'states' must come before labelings");
            if (ws.size() < 3 || ws[2] != ":")
                fail("expected: " + kind + " <name> : ...");
            auto hit = sig.lookup(ws[1]);
            if (kind == "prog") {
                if (!hit || hit->first != Signature::Sort::program)
                    fail("'" + ws[1] + "' is not a declared program variable");
                if (seen_prog[hit->second]++) fail("'" + ws[1] + "' labeled twice");
                ProgLine pl{hit->second, {}};
                // Edges are state pairs separated by commas.
                std::vector<std::string> pair;
                for (std::size_t i = 3; i <= ws.size(); ++i) {
                    if (i == ws.size() || ws[i] == ",") {
                        if (pair.empty()) continue;
                        if (pair.size() != 2) fail("an edge needs exactly two states");
                        pl.edges.emplace_back(state_of(pair[0]), state_of(pair[1]));
                        pair.clear();
                    } else {
                        pair.push_back(ws[i]);
                    }
                }
                prog_lines.push_back(std::move(pl));
            } else {
                if (!hit || hit->first != Signature::Sort::boolean)
                    fail("'" + ws[1] + "' is not a declared Boolean variable");
                if (seen_bool[hit->second]++) fail("'" + ws[1] + "' labeled twice");
                BoolLine bl{hit->second, {}};
                for (std::size_t i = 3; i < ws.size(); ++i)
                    bl.states.push_back(state_of(ws[i]));
                bool_lines.push_back(std::move(bl));
            }
        } else if (kind == "weight") {
            if (!ring) fail("'semiring' must come before weight labelings");
            if (ws.size() != 4 || ws[2] != "=")
                fail("expected: weight <name> = <literal>");
            auto hit = sig.lookup(ws[1]);
            if (!hit || hit->first != Signature::Sort::weighting)
                fail("'" + ws[1] + "' is not a declared weighting variable");
            if (seen_weight[hit->second]++) fail("'" + ws[1] + "' labeled twice");
            try {
                weight_lines.push_back({hit->second, ring->parse_literal(ws[3])});
            } catch (const std::exception& e) {
                fail(std::string("bad weight literal: ") + e.what());
            }
        } else {
            fail("unknown directive '" + kind + "'");
        }
    }

    lineno = 0; // end-of-file diagnostics below
    if (!ring) throw IoError(path + ": missing 'semiring' line");
    if (states.empty()) throw IoError(path + ": missing 'states' line");
    for (std::size_t i = 0; i < seen_prog.size(); ++i)
        if (!seen_prog[i])
            throw IoError(path + ": program variable '" + sig.programs()[i] + "' is not labeled");
    for (std::size_t i = 0; i < seen_bool.size(); ++i)
        if (!seen_bool[i])
            throw IoError(path + ": Boolean variable '" + sig.booleans()[i] + "' is not labeled");
    for (std::size_t i = 0; i < seen_weight.size(); ++i)
        if (!seen_weight[i])
            throw IoError(path + ": weighting variable '" + sig.weightings()[i] + "' is not labeled");

    TransitionSystem ts(sig, *ring, states);
    for (const auto& pl : prog_lines)
        for (auto [from, to] : pl.edges) ts.add_edge(pl.var, from, to);
    for (const auto& bl : bool_lines)
        for (int s : bl.states) ts.set_bool(bl.var, s, true);
    for (auto& wl : weight_lines) ts.set_weight(wl.var, wl.v);
    return ts;
}

} // namespace kawt
