#include "rch/catalog.hpp"

#include "rch/homology.hpp"
#include "rch/invariants.hpp"
#include "rch/oracle.hpp"

#include <cstdlib>
#include <fstream>

#ifndef RCH_SOURCE_FIXTURES
#define RCH_SOURCE_FIXTURES "fixtures"
#endif

namespace rch {

namespace {

nlohmann::json lp(const char* s) { return nlohmann::json::parse(s); }

std::vector<NamedExample> buildEntries();

}  // namespace

const std::vector<NamedExample>& catalog_entries() {
    static const std::vector<NamedExample> entries = buildEntries();
    return entries;
}

std::vector<std::string> catalog_list() {
    std::vector<std::string> names;
    for (auto& e : catalog_entries()) names.push_back(e.name);
    return names;
}

const NamedExample& catalog_get(const std::string& name) {
    for (auto& e : catalog_entries())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown catalog entry: " + name);
}

std::string fixtures_dir() {
    if (const char* env = std::getenv("RCH_FIXTURES")) return env;
    if (std::ifstream("fixtures/theta.rg").good()) return "fixtures";
    return RCH_SOURCE_FIXTURES;
}

ParsedDiagram catalog_load(const NamedExample& ex) {
    return parse_diagram_file(fixtures_dir() + "/" + ex.file);
}

namespace {

// -- expectation evaluation ------------------------------------------------

nlohmann::json evalExpectation(const NamedExample& ex, const Expectation& e, const Caps& caps) {
    ParsedDiagram parsed = catalog_load(ex);
    const RibbonDiagram& rd = underlying(parsed);
    auto pmOf = [&]() {
        if (auto* pm = std::get_if<PMDiagram>(&parsed)) return *pm;
        return blowup(rd);
    };
    int n = e.params.is_object() ? e.params.value("n", 0) : 0;

    if (e.invariant == "bracket") return n_color_polynomial(pmOf(), n, caps).toJson();
    if (e.invariant == "ncolor-number") {
        Rat v = n_color_number(pmOf(), n, caps);
        return nlohmann::json(to_string(v));
    }
    if (e.invariant == "penrose") return penrose_polynomial(rd, caps).toJson();
    if (e.invariant == "two-var-penrose") return two_variable_penrose(pmOf(), caps).toJson();
    if (e.invariant == "tfcp") return total_face_color_at(rd, n, TfcPath::Oracle, caps).toJson();
    if (e.invariant == "tfcp-interpolated") return total_face_color_interpolated(rd, caps).toJson();
    if (e.invariant == "tsharp") return tsharp(pmOf(), n, caps).toJson();
    if (e.invariant == "bigraded") return tableToJson(bigraded_homology(pmOf(), n, caps));
    if (e.invariant == "filtered") return tableToJson(filtered_homology(pmOf(), n, caps));
    if (e.invariant == "spectral-invariant")
        return nlohmann::json(spectral_invariant(pmOf(), n, caps));
    if (e.invariant == "edge3") return nlohmann::json(to_string(edge_coloring_count(rd)));
    if (e.invariant == "flows") {
        int k = e.params.is_object() ? e.params.value("k", 4) : 4;
        return nlohmann::json(to_string(nowhere_zero_flow_count(rd, k)));
    }
    if (e.invariant == "surface") {
        SurfaceStats s = surface_stats(rd);
        return nlohmann::json{{"faces", s.faces},
                              {"euler", s.eulerCharacteristic},
                              {"orientable", s.orientable},
                              {"genus", s.genus},
                              {"crosscaps", s.crosscaps}};
    }
    throw std::logic_error("catalog: unknown invariant " + e.invariant);
}

}  // namespace

CheckOutcome catalog_check(const std::string& name, const Caps& caps, bool includeExpensive) {
    const NamedExample& ex = catalog_get(name);
    CheckOutcome out;
    {  // every fixture must parse and validate
        ParsedDiagram parsed = catalog_load(ex);
        if (auto* pm = std::get_if<PMDiagram>(&parsed)) requireValid(*pm);
        else requireValid(std::get<RibbonDiagram>(parsed));
    }
    for (auto& e : ex.expect) {
        if (e.expensive && !includeExpensive) {
            ++out.skipped;
            continue;
        }
        nlohmann::json got = evalExpectation(ex, e, caps);
        ++out.checked;
        if (got != e.expected) {
            out.failures.push_back(name + "/" + e.invariant + " params=" + e.params.dump() +
                                   ": expected " + e.expected.dump() + ", got " + got.dump());
        }
    }
    return out;
}

// -- the fixture table -----------------------------------------------------
//
// Values follow the worked examples and the reference tables; rotation
// systems for the larger graphs are certified by their surface stats before
// any value check runs (see tests).

namespace {

std::vector<NamedExample> buildEntries() {
    std::vector<NamedExample> v;
    auto J = [](std::initializer_list<nlohmann::json> t) { return nlohmann::json(t); };
    (void)J;

    v.push_back({"Loop",
                 "loop.rg",
                 {
                     {"surface", {}, lp(R"({"faces":2,"euler":2,"orientable":true,"genus":0,"crosscaps":0})"), "plane loop"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,-1],[2,1]]})"), "sphere row"},
                     {"bigraded", {{"n", 4}}, lp(R"({"bigraded":[[0,-2,1],[0,-1,2],[0,0,3],[0,1,3],[0,2,2],[0,3,1]]})"),
                      "worked example, 16 - 4 = 12 in degree 0"},
                     {"filtered", {{"n", 4}}, lp(R"({"filtered":[[0,12]]})"), "worked example"},
                     {"spectral-invariant", {{"n", 4}}, nlohmann::json(1), "collapse at the first page"},
                 }});

    v.push_back({"B_1s",
                 "loop.rg",
                 {
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,-1],[2,1]]})"), "reference table"},
                     {"tfcp", {{"n", 5}}, lp(R"({"var":"t","terms":[[0,20]]})"), "n(n-1) t^0"},
                 }});

    v.push_back({"B_1p",
                 "b1p.rg",
                 {
                     {"surface", {}, lp(R"({"faces":1,"euler":1,"orientable":false,"genus":0,"crosscaps":1})"), "projective plane"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,1],[2,-1]]})"), "reference table"},
                     {"tfcp", {{"n", 5}}, lp(R"({"var":"t","terms":[[1,20]]})"), "n(n-1) t^1"},
                 }});

    v.push_back({"B_2t",
                 "b2t.rg",
                 {
                     {"surface", {}, lp(R"({"faces":1,"euler":0,"orientable":true,"genus":1,"crosscaps":0})"), "torus"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,-1],[2,1]]})"), "reference table"},
                     {"tfcp", {{"n", 4}}, lp(R"({"var":"t","terms":[[2,12]]})"), "n(n-1) t^2"},
                     {"tfcp-interpolated", {}, lp(R"({"vars":["n","t"],"terms":[[1,2,-1],[2,2,1]]})"), "n(n-1) t^2"},
                 }});

    v.push_back({"B_2k",
                 "b2k.rg",
                 {
                     {"surface", {}, lp(R"({"faces":1,"euler":0,"orientable":false,"genus":0,"crosscaps":2})"), "Klein bottle"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,1],[2,-1]]})"), "reference table"},
                     {"tfcp", {{"n", 4}}, lp(R"({"var":"t","terms":[[1,12]]})"), "n(n-1) t^1"},
                 }});

    v.push_back({"B_2p",
                 "b2p.rg",
                 {
                     {"surface", {}, lp(R"({"faces":2,"euler":1,"orientable":false,"genus":0,"crosscaps":1})"), "projective plane"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,-1],[2,1]]})"), "reference table"},
                     {"tfcp", {{"n", 4}}, lp(R"({"var":"t","terms":[[0,12]]})"), "n(n-1) t^0"},
                 }});

    v.push_back({"theta",
                 "theta.rg",
                 {
                     {"surface", {}, lp(R"({"faces":3,"euler":2,"orientable":true,"genus":0,"crosscaps":0})"), "plane theta"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,2],[2,-3],[3,1]]})"), "n(n-1)(n-2)"},
                     {"tfcp-interpolated", {}, lp(R"({"vars":["n","t"],"terms":[[1,0,2],[2,0,-3],[3,0,1]]})"), "n(n-1)(n-2) t^0"},
                     {"spectral-invariant", {{"n", 2}}, nlohmann::json(2), "vanishes on the second page"},
                 }});

    v.push_back({"theta-pm",
                 "theta-pm.rg",
                 {
                     {"bracket", {{"n", 3}}, lp(R"({"var":"q","terms":[[-2,1],[-1,2],[0,2],[1,1]]})"), "introductory bracket"},
                     {"ncolor-number", {{"n", 3}}, nlohmann::json("6"), "evaluation at one"},
                     {"ncolor-number", {{"n", 2}}, nlohmann::json("2"), "two-cycle count"},
                     {"spectral-invariant", {{"n", 4}}, nlohmann::json(1), "collapse at the first page"},
                 }});

    v.push_back({"theta2-pm-a",
                 "theta2-pm-a.rg",
                 {
                     {"ncolor-number", {{"n", 2}}, nlohmann::json("2"), "worked example"},
                 }});

    v.push_back({"theta2-pm-b",
                 "theta2-pm-b.rg",
                 {
                     {"ncolor-number", {{"n", 2}}, nlohmann::json("4"), "worked example"},
                     {"bracket", {{"n", 2}}, lp(R"({"var":"q","terms":[[0,1],[3,2],[4,1]]})"), "graded Euler characteristic"},
                     {"bigraded", {{"n", 2}},
                      lp(R"({"bigraded":[[0,0,1],[0,1,1],[1,1,1],[2,3,2],[2,4,1]]})"), "reference table"},
                     {"filtered", {{"n", 2}}, lp(R"({"filtered":[[0,2],[2,2]]})"), "worked example"},
                     {"tsharp", {{"n", 2}},
                      lp(R"({"vars":["t","q"],"terms":[[0,0,1],[0,1,1],[1,1,1],[2,3,2],[2,4,1]]})"), "reference table"},
                     {"spectral-invariant", {{"n", 2}}, nlohmann::json(2), "one nonzero first-page differential"},
                 }});

    v.push_back({"K3",
                 "k3.rg",
                 {
                     {"surface", {}, lp(R"({"faces":2,"euler":2,"orientable":true,"genus":0,"crosscaps":0})"), "plane triangle"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,-4],[2,4]]})"), "4 n(n-1)"},
                     {"tfcp", {{"n", 4}}, lp(R"({"var":"t","terms":[[0,12],[2,36]]})"), "reference table"},
                     {"tfcp-interpolated", {},
                      lp(R"({"vars":["n","t"],"terms":[[1,0,-1],[1,2,-3],[2,0,1],[2,2,3]]})"), "n(n-1)(t^0 + 3 t^2)"},
                 }});

    v.push_back({"K4s",
                 "k4s.rg",
                 {
                     {"surface", {}, lp(R"({"faces":4,"euler":2,"orientable":true,"genus":0,"crosscaps":0})"), "sphere"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,-4],[2,8],[3,-5],[4,1]]})"), "n(n-1)(n-2)^2"},
                     {"tfcp", {{"n", 4}}, lp(R"({"var":"t","terms":[[0,24],[6,24]]})"), "reference table"},
                     {"tfcp-interpolated", {},
                      lp(R"({"vars":["n","t"],"terms":[[1,0,-6],[1,6,2],[2,0,11],[2,6,-3],[3,0,-6],[3,6,1],[4,0,1]]})"),
                      "n(n-1)(n-2)(n-3) t^0 + n(n-1)(n-2) t^6"},
                     {"edge3", {}, nlohmann::json("6"), "brute force"},
                     {"flows", {{"k", 4}}, nlohmann::json("6"), "brute force"},
                 }});

    v.push_back({"K4t",
                 "k4t.rg",
                 {
                     {"surface", {}, lp(R"({"faces":2,"euler":0,"orientable":true,"genus":1,"crosscaps":0})"), "torus"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,-4],[2,8],[3,-5],[4,1]]})"), "n(n-1)(n-2)^2"},
                     {"tfcp", {{"n", 4}}, lp(R"({"var":"t","terms":[[2,24],[4,24]]})"), "reference table"},
                     {"tfcp-interpolated", {},
                      lp(R"({"vars":["n","t"],"terms":[[1,2,2],[1,4,-6],[2,2,-3],[2,4,11],[3,2,1],[3,4,-6],[4,4,1]]})"),
                      "n(n-1)(n-2) t^2 + n(n-1)(n-2)(n-3) t^4"},
                 }});

    v.push_back({"P3",
                 "p3.rg",
                 {
                     {"surface", {}, lp(R"({"faces":5,"euler":2,"orientable":true,"genus":0,"crosscaps":0})"), "plane prism"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,8],[2,-20],[3,18],[4,-7],[5,1]]})"), "n(n-1)(n-2)^3"},
                     {"tfcp", {{"n", 4}}, lp(R"({"var":"t","terms":[[0,24],[6,72]]})"), "reference table"},
                     {"tfcp-interpolated", {},
                      lp(R"({"vars":["n","t"],"terms":[[1,0,18],[1,6,-10],[2,0,-39],[2,6,19],[3,0,29],[3,6,-11],[4,0,-9],[4,6,2],[5,0,1]]})"),
                      "closed form"},
                 }});

    v.push_back({"P4",
                 "p4.rg",
                 {
                     {"surface", {}, lp(R"({"faces":6,"euler":2,"orientable":true,"genus":0,"crosscaps":0})"), "plane prism"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,-208],[2,420],[3,-284],[4,83],[5,-12],[6,1]]})"), "reference table"},
                     {"tfcp", {{"n", 4}},
                      lp(R"({"var":"t","terms":[[0,96],[4,144],[6,288],[8,72],[10,144],[12,24]]})"), "reference table"},
                     {"tfcp-interpolated", {},
                      lp(R"({"vars":["n","t"],"terms":[[1,0,-64],[1,4,-12],[1,6,-72],[1,8,-18],[1,10,-36],[1,12,-6],)"
                         R"([2,0,154],[2,4,24],[2,6,132],[2,8,33],[2,10,66],[2,12,11],)"
                         R"([3,0,-137],[3,4,-15],[3,6,-72],[3,8,-18],[3,10,-36],[3,12,-6],)"
                         R"([4,0,58],[4,4,3],[4,6,12],[4,8,3],[4,10,6],[4,12,1],[5,0,-12],[6,0,1]]})"),
                      "closed form", true},
                 }});

    v.push_back({"K5",
                 "k5.rg",
                 {
                     {"surface", {}, lp(R"({"faces":3,"euler":-2,"orientable":true,"genus":2,"crosscaps":0})"), "genus two"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[[1,176],[2,-396],[3,316],[4,-115],[5,20],[6,-1]]})"), "reference table"},
                     {"tfcp", {{"n", 4}},
                      lp(R"({"var":"t","terms":[[0,36],[3,120],[4,180],[5,120],[6,1560]]})"), "reference table"},
                 }});

    v.push_back({"K6",
                 "k6.rg",
                 {
                     {"surface", {}, lp(R"({"faces":3,"euler":-6,"orientable":true,"genus":4,"crosscaps":0})"), "genus four"},
                     {"penrose", {},
                      lp(R"({"var":"n","terms":[[1,-368],[2,1472],[3,-2488],[4,2328],[5,-1327],[6,478],[7,-109],[8,15],[9,-1]]})"),
                      "reference table", true},
                     {"tfcp", {{"n", 4}},
                      lp(R"({"var":"t","terms":[[3,72],[6,384],[7,3024],[9,5256],[10,864]]})"), "reference table", true},
                 }});

    v.push_back({"K33-pm",
                 "k33-pm.rg",
                 {
                     {"bracket", {{"n", 3}},
                      lp(R"({"var":"q","terms":[[-3,1],[-2,3],[-1,3],[0,1],[1,-1],[2,-2],[3,-2],[4,-2],[5,-1]]})"),
                      "worked example"},
                     {"ncolor-number", {{"n", 3}}, nlohmann::json("0"), "evaluation at one"},
                     {"bigraded", {{"n", 3}},
                      lp(R"({"bigraded":[[0,-3,1],[0,-2,3],[0,-1,3],[0,0,1],[1,1,1],[1,2,1],[3,2,1],[3,3,2],[3,4,2],[3,5,1]]})"),
                      "reference table"},
                     {"filtered", {{"n", 3}}, lp(R"({"filtered":[[0,6],[3,6]]})"), "worked example"},
                     {"spectral-invariant", {{"n", 3}}, nlohmann::json(2), "first-page collapse after d1"},
                 }});

    v.push_back({"K33-torus",
                 "k33-torus.rg",
                 {
                     {"surface", {}, lp(R"({"faces":3,"euler":0,"orientable":true,"genus":1,"crosscaps":0})"), "torus"},
                     {"penrose", {}, lp(R"({"var":"n","terms":[]})"), "identically zero"},
                     {"bracket", {{"n", 3}},
                      lp(R"({"var":"q","terms":[[-3,1],[-2,2],[-1,1],[0,4],[1,-2],[2,-15],[3,11],[4,-14],[5,14],[6,-11],[7,15],[8,2],[9,-4],[10,-1],[11,-2],[12,-1]]})"),
                      "worked example"},
                     {"tfcp", {{"n", 4}},
                      lp(R"({"var":"t","terms":[[2,24],[3,48],[4,24],[5,24],[6,48],[7,24]]})"), "reference table"},
                     {"filtered", {{"n", 4}},
                      lp(R"({"filtered":[[2,24],[3,48],[4,24],[5,24],[6,48],[7,24]]})"), "even-odd table", true},
                     {"edge3", {}, nlohmann::json("12"), "brute force"},
                 }});

    v.push_back({"Petersen",
                 "petersen.rg",
                 {
                     {"penrose", {}, lp(R"({"var":"n","terms":[]})"), "identically zero"},
                     {"tfcp", {{"n", 4}}, lp(R"({"var":"t","terms":[]})"), "no nowhere-zero 4-flow", true},
                     {"tfcp", {{"n", 5}},
                      lp(R"({"var":"t","terms":[[4,1200],[6,600],[7,600],[8,600],[9,2400],[10,600]]})"),
                      "reference table", true},
                     {"edge3", {}, nlohmann::json("0"), "snark"},
                 }});

    v.push_back({"dumbbell",
                 "dumbbell.rg",
                 {
                     {"penrose", {}, lp(R"({"var":"n","terms":[]})"), "bridge"},
                     {"tfcp", {{"n", 4}}, lp(R"({"var":"t","terms":[]})"), "bridge"},
                     {"filtered", {{"n", 3}}, lp(R"({"filtered":[]})"), "bridge"},
                 }});

    return v;
}

}  // namespace

}  // namespace rch
