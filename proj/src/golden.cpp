#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "dw/cli.hpp"

#ifndef DW_DATA_DIR
#define DW_DATA_DIR "data"
#endif

namespace dw {

namespace {

struct Csv {
    std::string title;
    std::vector<std::string> cols, rows;
    std::vector<std::vector<long>> m;
};

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Csv read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Csv c;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            c.title = line.substr(1);
            continue;
        }
        auto f = split_csv_line(line);
        if (!header) {
            c.cols.assign(f.begin() + 1, f.end());
            header = true;
            continue;
        }
        if (f.size() != c.cols.size() + 1) throw std::runtime_error(path + ": ragged row " + f[0]);
        c.rows.push_back(f[0]);
        std::vector<long> r;
        for (size_t i = 1; i < f.size(); ++i) r.push_back(std::stol(f[i]));
        c.m.push_back(r);
    }
    return c;
}

using Relabel = std::function<std::string(const std::string&)>;

struct Ours {
    std::vector<std::string> rows, cols;
    std::vector<std::vector<long>> m;
};

struct GoldenSpec {
    std::string file, suite;
    std::function<Ours()> build;
    Relabel row, col;  // golden label -> our label
    bool col_by_index = false;
};

std::string identity(const std::string& s) { return s; }

std::string strip_bar(const std::string& s) {
    std::string r = s;
    for (size_t p; (p = r.find("bar")) != std::string::npos;) r.erase(p, 3);
    return r;
}

// "(x,y)" -> {"x","y"} at the top nesting level
std::vector<std::string> top_split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (size_t i = 1; i + 1 < s.size(); ++i) {
        char c = s[i];
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
            continue;
        }
        depth += c == '(' ? 1 : c == ')' ? -1 : 0;
        cur += c;
    }
    out.push_back(cur);
    return out;
}

Relabel table_map(std::map<std::string, std::string> m) {
    return [m](const std::string& s) {
        auto it = m.find(s);
        return it == m.end() ? "?" + s : it->second;
    };
}

template <class T>
Ours ours(const T& t) {
    return {t.rows, t.cols, t.m};
}

CocycleSpec single(CocycleTerm::Kind k, long n) {
    CocycleSpec s;
    CocycleTerm t;
    t.kind = k;
    t.n = n;
    s.terms = {t};
    return s;
}

Ours boundary_table(const Group& G, const CocycleSpec& spec, const Subset& H,
                    const std::optional<Cochain>& twist = std::nullopt) {
    Cochain w = make_cocycle(G, spec);
    Tube t = build_tube(G, w, &spec);
    Boundary bd = make_boundary(G, w, H, twist);
    SemiTube s = build_semitube(bd);
    return ours(fusion_table(t, s, true));
}

Ours wall_table(const ModelSpec& l, const ModelSpec& r, int gl, int gr) {
    auto fm = fold(l, r);
    Boundary bd = make_boundary(fm->G, fm->omega, closure(fm->G, {fm->pair(gl, gr)}));
    SemiTube s = build_semitube(bd);
    return ours(tunneling_table(*fm, s));
}

Ours condensation_table(const CondensationWall& w) {
    Boundary bd = make_boundary(w.fm->G, w.fm->omega, w.H, std::nullopt, w.thin, "library");
    SemiTube s = build_semitube(bd);
    return ours(tunneling_table(*w.fm, s));
}

const Group& z2z2() {
    static Group G = make_product({make_cyclic(2), make_cyclic(2)});
    return G;
}
const Group& s3() {
    static Group G = make_s3();
    return G;
}

std::vector<GoldenSpec> specs() {
    std::vector<GoldenSpec> v;
    // Z2 x Z2, untwisted: boundary labels are (coset, character of K) in the table's notation
    auto coset = [](const std::string& c) { return c == "(0,0)" ? std::string("H") : c; };
    v.push_back({"z2z2_h00.csv", "appendixA", [] { return boundary_table(z2z2(), {}, {0}); }, identity,
                 [coset](const std::string& s) { return "(" + coset(s.substr(3)) + ",(0,0))"; }});
    v.push_back({"z2z2_h01.csv", "appendixA", [] { return boundary_table(z2z2(), {}, closure(z2z2(), {1})); },
                 identity, [coset](const std::string& s) {
                     auto p = top_split(s);
                     return "(" + coset(p[0].substr(3)) + "," + p[1] + ")";
                 }});
    v.push_back({"z2z2_h11.csv", "appendixA", [] { return boundary_table(z2z2(), {}, closure(z2z2(), {3})); },
                 identity, [](const std::string& s) {
                     auto p = top_split(s);
                     std::string c = p[0] == "bar(0,0)" ? "H" : "(0,1)";
                     std::string k = p[1] == "(0,0)" ? "(0,0)" : "(0,1)";
                     return "(" + c + "," + k + ")";
                 }});
    for (long q : {0L, 1L}) {
        v.push_back({q ? "z2z2_hg_twisted.csv" : "z2z2_hg_trivial.csv", "appendixA",
                     [q] {
                         return boundary_table(z2z2(), {}, closure(z2z2(), {1, 2}),
                                               make_2cocycle(z2z2(), {{0, 1, q, 2}}));
                     },
                     identity, [q](const std::string& s) {
                         auto p = top_split(s);
                         return q ? "(H," + s + ")" : "(H,(" + p[1] + "," + p[0] + "))";
                     }});
    }
    // S3 with H = <r> and H = <t>
    auto s3cols = table_map({{"(Hr,0)", "(H,0)"}, {"(Hr,1)", "(H,1)"}, {"(Hr,2)", "(H,2)"},
                             {"(HrtHr,0)", "(t,0)"}, {"(HrtHr,1)", "(t,1)"}, {"(HrtHr,2)", "(t,2)"},
                             {"(Ht,0)", "(H,0)"}, {"(Ht,1)", "(H,1)"}, {"(HtrHt,0)", "(r,0)"}});
    for (long p : {0L, 3L})
        v.push_back({"s3_hr_p" + std::to_string(p) + ".csv", "s3",
                     [p] { return boundary_table(s3(), single(CocycleTerm::S3, p), closure(s3(), {1})); }, strip_bar,
                     s3cols});
    for (long p : {0L, 2L, 4L})
        v.push_back({"s3_ht_p" + std::to_string(p) + ".csv", "s3",
                     [p] { return boundary_table(s3(), single(CocycleTerm::S3, p), closure(s3(), {3})); }, strip_bar,
                     s3cols});
    // walls
    auto z = [](int N) { return make_cyclic(N); };
    v.push_back({"tunneling_s3_z2.csv", "walls",
                 [z] {
                     return wall_table({s3(), single(CocycleTerm::S3, 3)}, {z(2), single(CocycleTerm::TypeI, -1)}, 3, 1);
                 },
                 strip_bar, table_map({{"1", "(0,0)"}, {"b", "(0,1)"}, {"s", "(1,0)"}, {"sbar", "(1,1)"}})});
    v.push_back({"tunneling_s3_z3.csv", "walls",
                 [z] {
                     return wall_table({s3(), single(CocycleTerm::S3, 4)}, {z(3), single(CocycleTerm::TypeI, 1)}, 1, 1);
                 },
                 strip_bar, identity});
    v.push_back({"condensation_z4_ds.csv", "walls", [] { return condensation_table(condensation_wall_typeI(2, 1)); },
                 identity, table_map({{"1", "(0,0)"}, {"b", "(0,1)"}, {"sbar", "(1,0)"}, {"s", "(1,1)"}})});
    v.push_back({"condensation_sixsemion.csv", "walls",
                 [] { return condensation_table(condensation_wall_typeI_II(2, 1, 3)); },
                 [](const std::string& s) {
                     auto p = top_split(s);
                     return "((" + p[0] + "," + p[1] + "),(" + p[2] + "," + p[3] + "))";
                 },
                 identity, true});
    return v;
}

GoldenResult check(const GoldenSpec& g) {
    GoldenResult r;
    r.table = g.file;
    Csv c;
    Ours o;
    try {
        c = read_csv(golden_dir() + "/golden/" + g.file);
        o = g.build();
    } catch (const std::exception& e) {
        r.diff.push_back(std::string("error: ") + e.what());
        return r;
    }
    if (!c.title.empty()) r.table += " [" + c.title.substr(c.title.find_first_not_of(' ')) + "]";
    std::map<std::string, size_t> ri, ci;
    for (size_t i = 0; i < o.rows.size(); ++i) ri[o.rows[i]] = i;
    for (size_t j = 0; j < o.cols.size(); ++j) ci[o.cols[j]] = j;
    if (g.col_by_index && c.cols.size() != o.cols.size())
        r.diff.push_back("column count " + std::to_string(o.cols.size()) + " vs " + std::to_string(c.cols.size()));
    for (size_t i = 0; i < c.rows.size(); ++i) {
        auto rit = ri.find(g.row(c.rows[i]));
        if (rit == ri.end()) {
            r.diff.push_back("row " + c.rows[i] + " has no counterpart");
            continue;
        }
        for (size_t j = 0; j < c.cols.size(); ++j) {
            size_t oj;
            if (g.col_by_index) {
                oj = j;
                if (oj >= o.cols.size()) continue;
            } else {
                auto cit = ci.find(g.col(c.cols[j]));
                if (cit == ci.end()) {
                    if (i == 0) r.diff.push_back("column " + c.cols[j] + " has no counterpart");
                    continue;
                }
                oj = cit->second;
            }
            long got = o.m[rit->second][oj];
            if (got != c.m[i][j])
                r.diff.push_back(c.rows[i] + " x " + c.cols[j] + ": computed " + std::to_string(got) + ", table " +
                                 std::to_string(c.m[i][j]));
        }
    }
    r.pass = r.diff.empty();
    return r;
}

}  // namespace

std::string golden_dir() {
    if (const char* e = std::getenv("DW_DATA_DIR")) return e;
    return DW_DATA_DIR;
}

std::vector<std::string> golden_suites() { return {"appendixA", "s3", "walls"}; }

std::vector<GoldenResult> verify_golden(const std::string& suite) {
    std::vector<GoldenResult> out;
    bool known = suite == "all";
    for (auto& s : golden_suites()) known |= s == suite;
    if (!known) throw ConfigError("unknown suite '" + suite + "' (appendixA, s3, walls, all)");
    for (auto& g : specs())
        if (suite == "all" || g.suite == suite) out.push_back(check(g));
    return out;
}

int verify_golden_report(const std::string& suite, std::ostream& out) {
    int fails = 0;
    for (auto& r : verify_golden(suite)) {
        out << (r.pass ? "PASS " : "FAIL ") << r.table << "\n";
        for (auto& d : r.diff) out << "    " << d << "\n";
        fails += !r.pass;
    }
    return fails;
}

}  // namespace dw
