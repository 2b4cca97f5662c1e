#include "rch/dsl.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace rch {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) toks.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

}  // namespace

ParsedDiagram parse_diagram(const std::string& text) {
    RibbonDiagram d;
    std::set<int> matching;
    bool anyMatched = false;
    std::map<std::string, int> vidOf, eidOf;
    std::map<int, std::pair<std::string, int>> pendingRotations;  // vertex -> (spec line body, line no)
    std::vector<std::pair<int, std::vector<std::string>>> rotationLines;

    auto vertex = [&](const std::string& name) {
        auto it = vidOf.find(name);
        if (it != vidOf.end()) return it->second;
        int id = d.addVertex(name);
        vidOf[name] = id;
        return id;
    };

    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "graph") {
            if (toks.size() != 2) throw ParseError(lineNo, "expected: graph <name>");
            d.name = toks[1];
        } else if (kw == "edge") {
            if (toks.size() < 4) throw ParseError(lineNo, "expected: edge <eid> <v> <v> [sign=+|-] [matched]");
            if (eidOf.count(toks[1])) throw ParseError(lineNo, "duplicate edge id " + toks[1]);
            int sign = +1;
            bool matched = false;
            for (size_t i = 4; i < toks.size(); ++i) {
                if (toks[i] == "matched")
                    matched = true;
                else if (toks[i] == "sign=+" || toks[i] == "sign=+1")
                    sign = +1;
                else if (toks[i] == "sign=-" || toks[i] == "sign=-1")
                    sign = -1;
                else
                    throw ParseError(lineNo, "unknown edge attribute " + toks[i]);
            }
            int id = d.addEdge(toks[1], vertex(toks[2]), vertex(toks[3]), sign);
            eidOf[toks[1]] = id;
            if (matched) {
                matching.insert(id);
                anyMatched = true;
            }
        } else if (kw == "vertex") {
            if (toks.size() < 2) throw ParseError(lineNo, "expected: vertex <vid>: <eid>.<end> , ...");
            std::string vname = toks[1];
            if (!vname.empty() && vname.back() == ':') vname.pop_back();
            if (vname.empty()) throw ParseError(lineNo, "missing vertex id");
            std::vector<std::string> refs(toks.begin() + 2, toks.end());
            if (!refs.empty() && refs[0] == ":") refs.erase(refs.begin());
            rotationLines.push_back({lineNo, {}});
            rotationLines.back().second.push_back(vname);
            for (auto& r : refs) rotationLines.back().second.push_back(r);
        } else if (kw == "circles") {
            if (toks.size() != 2) throw ParseError(lineNo, "expected: circles <count>");
            try {
                d.freeCircles = std::stoi(toks[1]);
            } catch (...) {
                throw ParseError(lineNo, "bad circle count " + toks[1]);
            }
        } else {
            throw ParseError(lineNo, "unknown directive " + kw);
        }
    }

    // Resolve rotations after all edges exist.
    std::set<std::pair<int, int>> placed;
    for (auto& [ln, body] : rotationLines) {
        auto it = vidOf.find(body[0]);
        if (it == vidOf.end()) throw ParseError(ln, "vertex " + body[0] + " has no incident edges");
        int v = it->second;
        if (!d.rotation[v].empty()) throw ParseError(ln, "vertex " + body[0] + " listed twice");
        for (size_t i = 1; i < body.size(); ++i) {
            auto dot = body[i].rfind('.');
            if (dot == std::string::npos) throw ParseError(ln, "half-edge must look like <eid>.<0|1>");
            std::string ename = body[i].substr(0, dot), endStr = body[i].substr(dot + 1);
            auto eit = eidOf.find(ename);
            if (eit == eidOf.end()) throw ParseError(ln, "unknown edge " + ename);
            if (endStr != "0" && endStr != "1") throw ParseError(ln, "edge end must be 0 or 1");
            Dart dart{eit->second, endStr == "1" ? 1 : 0};
            if (!placed.insert({dart.e, dart.end}).second)
                throw ParseError(ln, "half-edge " + body[i] + " placed twice");
            d.rotation[v].push_back(dart);
        }
    }

    if (anyMatched) {
        PMDiagram pm{d, matching};
        auto rep = validate(pm);
        if (!rep.valid()) throw std::invalid_argument(rep.str());
        return pm;
    }
    auto rep = validate(d);
    if (!rep.valid()) throw std::invalid_argument(rep.str());
    return d;
}

ParsedDiagram parse_diagram_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_diagram(ss.str());
}

namespace {

std::string serializeImpl(const RibbonDiagram& d, const std::set<int>* matching) {
    std::ostringstream os;
    os << "graph " << (d.name.empty() ? "unnamed" : d.name) << "\n";
    for (int e = 0; e < d.numEdges(); ++e) {
        os << "edge " << d.edges[e].name << " " << d.vertexNames[d.edges[e].u] << " "
           << d.vertexNames[d.edges[e].v];
        if (d.edges[e].sign < 0) os << " sign=-";
        if (matching && matching->count(e)) os << " matched";
        os << "\n";
    }
    for (int v = 0; v < d.numVertices(); ++v) {
        os << "vertex " << d.vertexNames[v] << ":";
        for (size_t i = 0; i < d.rotation[v].size(); ++i) {
            const Dart& dart = d.rotation[v][i];
            os << (i ? ", " : " ") << d.edges[dart.e].name << "." << dart.end;
        }
        os << "\n";
    }
    if (d.freeCircles > 0) os << "circles " << d.freeCircles << "\n";
    return os.str();
}

}  // namespace

std::string serialize(const RibbonDiagram& d) { return serializeImpl(d, nullptr); }

std::string serialize(const PMDiagram& pm) { return serializeImpl(pm.d, &pm.matching); }

PMDiagram as_pm(const ParsedDiagram& p) {
    if (auto* pm = std::get_if<PMDiagram>(&p)) return *pm;
    const RibbonDiagram& d = std::get<RibbonDiagram>(p);
    if (d.numVertices() == 0) return PMDiagram{d, {}};
    throw std::invalid_argument(
        "this operation needs a perfect matching; mark edges `matched` or pass --blowup");
}

}  // namespace rch
