#include "dw/cli.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dw {

using nlohmann::json;

static void only_fields(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (auto* a : allowed) ok |= it.key() == a;
        if (!ok) throw ConfigError(where + ": unknown field '" + it.key() + "'");
    }
}

static Group parse_group(const json& j) {
    auto factor = [](const json& f) -> Group {
        if (f.is_string() && f.get<std::string>() == "S3") return make_s3();
        if (f.is_number_integer() && f.get<int>() >= 1 && f.get<int>() <= 64) return make_cyclic(f.get<int>());
        throw ConfigError("group: factors are positive integers (cyclic orders) or \"S3\"");
    };
    std::vector<Group> fs;
    if (j.is_array()) {
        if (j.empty()) throw ConfigError("group: empty factor list");
        for (auto& f : j) fs.push_back(factor(f));
    } else {
        fs.push_back(factor(j));
    }
    Group G = fs.size() == 1 ? fs[0] : make_product(fs);
    if (G.n > 64) throw ConfigError("group: order above 64 is not supported");
    return G;
}

Group parse_group_spec(const std::string& text) { return parse_group(json::parse(text)); }

static CocycleSpec parse_cocycle(const json& j, const Group& G) {
    CocycleSpec spec;
    const json* terms = &j;
    if (j.is_object()) {
        only_fields(j, {"terms", "conjugate", "table"}, "cocycle");
        if (j.contains("table")) {
            spec.table = cochain_from_json(G, j.at("table").dump());
            if (spec.table->degree != 3) throw ConfigError("cocycle table must have degree 3");
        }
        spec.conjugate = j.value("conjugate", false);
        if (!j.contains("terms")) return spec;
        terms = &j.at("terms");
    }
    if (!terms->is_array()) throw ConfigError("cocycle: expected a list of terms");
    int nf = (int)G.factors.size();
    for (auto& t : *terms) {
        only_fields(t, {"type", "i", "j", "k", "n", "p"}, "cocycle term");
        CocycleTerm c;
        std::string type = t.at("type").get<std::string>();
        c.i = t.value("i", 0);
        c.j = t.value("j", c.i == 0 ? 1 : 0);
        c.k = t.value("k", 2);
        c.n = t.contains("p") ? t.at("p").get<long>() : t.value("n", 1L);
        if (type != "III" && t.contains("k")) throw ConfigError("cocycle: only type III terms take k");
        if (type == "I") {
            c.kind = CocycleTerm::TypeI;
            c.j = c.k = c.i;
        } else if (type == "II") {
            c.kind = CocycleTerm::TypeII;
            c.k = c.j;
        } else if (type == "III") {
            c.kind = CocycleTerm::TypeIII;
        } else if (type == "S3") {
            c.kind = CocycleTerm::S3;
            c.j = c.k = c.i;
        } else {
            throw ConfigError("cocycle: unknown term type '" + type + "'");
        }
        if ((c.kind == CocycleTerm::TypeII && c.i == c.j) ||
            (c.kind == CocycleTerm::TypeIII && (c.i == c.j || c.j == c.k || c.i == c.k)))
            throw ConfigError("cocycle: mixed terms need distinct factors");
        for (int x : {c.i, c.j, c.k})
            if (x < 0 || x >= nf) throw ConfigError("cocycle: factor index out of range");
        bool s3 = c.kind == CocycleTerm::S3;
        for (int x : {c.i, c.j, c.k})
            if ((bool)G.factor_is_s3[x] != s3) throw ConfigError("cocycle: term type does not match factor " + std::to_string(x));
        spec.terms.push_back(c);
    }
    return spec;
}

static ModelSpec parse_model(const json& j, const std::string& where) {
    only_fields(j, {"group", "cocycle"}, where);
    ModelSpec m{parse_group(j.at("group")), {}};
    if (j.contains("cocycle")) m.spec = parse_cocycle(j.at("cocycle"), m.G);
    return m;
}

static std::string element_text(const json& e) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return std::to_string(e.get<int>());
    if (e.is_array()) {
        std::string s = "(";
        for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + element_text(e[i]);
        return s + ")";
    }
    throw ConfigError("bad element notation " + e.dump());
}

static BoundarySpec parse_boundary(const json& j) {
    only_fields(j, {"generators", "twist", "thin"}, "boundary");
    BoundarySpec b;
    for (auto& g : j.value("generators", json::array())) b.generators.push_back(element_text(g));
    for (auto& t : j.value("twist", json::array())) {
        only_fields(t, {"i", "j", "q", "M"}, "twist term");
        TwoCocycleTerm w;
        w.i = t.value("i", 0);
        w.j = t.value("j", 1);
        w.q = t.value("q", 0L);
        w.M = t.value("M", 0L);
        b.twist.push_back(w);
    }
    if (j.contains("thin")) b.thin_json = j.at("thin").dump();
    return b;
}

static void check_mode_format(const ModelConfig& c) {
    static const std::set<std::string> modes = {"anyons", "boundary-anyons", "fusion-table", "lagrangian", "tunneling", "gsd"};
    static const std::set<std::string> formats = {"csv", "markdown", "json"};
    if (!modes.count(c.mode)) throw ConfigError("unknown mode '" + c.mode + "'");
    if (!formats.count(c.format)) throw ConfigError("unknown format '" + c.format + "'");
}

ModelConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    only_fields(j, {"group", "cocycle", "boundary", "wall", "mode", "format"}, "config");
    ModelConfig c;
    try {
        if (j.contains("group")) {
            json m = {{"group", j.at("group")}};
            if (j.contains("cocycle")) m["cocycle"] = j.at("cocycle");
            c.model = parse_model(m, "config");
        } else if (j.contains("cocycle")) {
            throw ConfigError("config: cocycle given without group");
        }
        if (j.contains("boundary")) c.boundary = parse_boundary(j.at("boundary"));
        if (j.contains("wall")) {
            const json& w = j.at("wall");
            only_fields(w, {"left", "right", "boundary", "condensation"}, "wall");
            WallSpec ws;
            if (w.contains("condensation")) {
                const json& cj = w.at("condensation");
                only_fields(cj, {"kind", "N", "n", "m"}, "condensation");
                CondensationSpec cs;
                cs.kind = cj.at("kind").get<std::string>();
                cs.N = cj.value("N", 2);
                cs.n = cj.value("n", 1L);
                cs.m = cj.value("m", 0L);
                if (cs.kind != "typeI" && cs.kind != "typeI_II") throw ConfigError("condensation: kind is typeI or typeI_II");
                if (cs.N < 2 || cs.N > 4) throw ConfigError("condensation: N must be in 2..4");
                ws.condensation = cs;
            } else {
                ws.left = parse_model(w.at("left"), "wall.left");
                ws.right = parse_model(w.at("right"), "wall.right");
                if (w.contains("boundary")) ws.boundary = parse_boundary(w.at("boundary"));
            }
            c.wall = ws;
        }
        c.mode = j.value("mode", c.mode);
        c.format = j.value("format", c.format);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    check_mode_format(c);
    return c;
}

// ---- serialization

static std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string table_csv(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                      const std::vector<std::vector<long>>& m, const std::vector<std::string>* extra,
                      const std::string& extra_name) {
    std::ostringstream os;
    os << "anyon";
    for (auto& c : cols) os << ',' << csv_cell(c);
    if (extra) os << ',' << extra_name;
    os << '\n';
    for (size_t i = 0; i < rows.size(); ++i) {
        os << csv_cell(rows[i]);
        for (long v : m[i]) os << ',' << v;
        if (extra) os << ',' << (*extra)[i];
        os << '\n';
    }
    return os.str();
}

std::string table_markdown(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                           const std::vector<std::vector<long>>& m, const std::vector<std::string>* extra,
                           const std::string& extra_name) {
    std::ostringstream os;
    os << "| |";
    for (auto& c : cols) os << ' ' << c << " |";
    if (extra) os << ' ' << extra_name << " |";
    os << "\n|---|";
    for (size_t i = 0; i < cols.size() + (extra ? 1 : 0); ++i) os << "---|";
    os << '\n';
    for (size_t i = 0; i < rows.size(); ++i) {
        os << "| " << rows[i] << " |";
        for (long v : m[i]) os << ' ' << v << " |";
        if (extra) os << ' ' << (*extra)[i] << " |";
        os << '\n';
    }
    return os.str();
}

std::string fusion_table_json(const FusionTable& t) {
    json j;
    j["title"] = t.title;
    j["rows"] = t.rows;
    j["cols"] = t.cols;
    j["m"] = t.m;
    return j.dump(2) + "\n";
}

FusionTable fusion_table_from_json(const std::string& text) {
    json j = json::parse(text);
    FusionTable t;
    t.title = j.value("title", "");
    t.rows = j.at("rows").get<std::vector<std::string>>();
    t.cols = j.at("cols").get<std::vector<std::string>>();
    t.m = j.at("m").get<std::vector<std::vector<long>>>();
    return t;
}

static double clean(double x) {
    double r = std::round(x * 1e12) / 1e12;
    return r == 0 ? 0.0 : r;
}

static std::string blocks_out(const Group& G, const std::vector<Block>& bs, const std::vector<std::string>& names,
                              const std::vector<std::string>& sector, const std::string& sector_key,
                              const std::function<std::string(int)>& point_name, const std::string& fmt) {
    if (fmt == "json") {
        json arr = json::array();
        for (size_t i = 0; i < bs.size(); ++i) {
            json e;
            e["name"] = names[i];
            e[sector_key] = sector[i];
            e["irrep"] = bs[i].label;
            e["dim"] = bs[i].dim();
            json ch = json::object();
            for (size_t p = 0; p < bs[i].orbit.size(); ++p) {
                json row = json::object();
                for (int h : bs[i].stab[p]) {
                    cd v = bs[i].chi[p][h];
                    row[G.element_name(h)] = {clean(v.real()), clean(v.imag())};
                }
                ch[point_name(bs[i].orbit[p])] = row;
            }
            e["characters"] = ch;
            arr.push_back(e);
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == "markdown") {
        os << "| anyon | " << sector_key << " | irrep | dim |\n|---|---|---|---|\n";
        for (size_t i = 0; i < bs.size(); ++i)
            os << "| " << names[i] << " | " << sector[i] << " | " << bs[i].label << " | " << bs[i].dim() << " |\n";
    } else {
        os << "anyon," << sector_key << ",irrep,dim\n";
        for (size_t i = 0; i < bs.size(); ++i)
            os << csv_cell(names[i]) << ',' << csv_cell(sector[i]) << ',' << csv_cell(bs[i].label) << ','
               << bs[i].dim() << '\n';
    }
    return os.str();
}

static std::string describe(const ModelSpec& m) {
    std::string s = m.G.name;
    if (m.spec.table) return s + " with user cocycle";
    for (auto& t : m.spec.terms) {
        static const char* kinds[] = {"I", "II", "III", "S3"};
        s += " " + std::string(kinds[t.kind]) + "[" + std::to_string(t.i);
        if (t.kind == CocycleTerm::TypeII || t.kind == CocycleTerm::TypeIII) s += "," + std::to_string(t.j);
        if (t.kind == CocycleTerm::TypeIII) s += "," + std::to_string(t.k);
        s += "]^" + std::to_string(t.n);
    }
    if (m.spec.conjugate) s += " (conjugated)";
    return s;
}

static Subset subgroup_of(const Group& G, const std::vector<std::string>& gens) {
    std::vector<int> g;
    for (auto& s : gens) {
        try {
            g.push_back(G.parse_element(s));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    return closure(G, g);
}

static Boundary boundary_from(const Group& G, const Cochain& omega, const BoundarySpec& b) {
    Subset H = subgroup_of(G, b.generators);
    std::optional<Cochain> twist, thin;
    try {
        if (!b.twist.empty()) twist = make_2cocycle(G, b.twist);
        if (b.thin_json) thin = cochain_from_json(G, *b.thin_json);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return make_boundary(G, omega, H, twist, thin, thin ? "user" : "");
}

static std::string subgroup_text(const Group& G, const Subset& H) {
    std::string s = "{";
    for (size_t i = 0; i < H.size(); ++i) s += (i ? "," : "") + G.element_name(H[i]);
    return s + "}";
}

static int run_inner(const ModelConfig& cfg, std::ostream& out, bool oracle) {
    check_mode_format(cfg);
    const std::string& fmt = cfg.format;
    if (cfg.mode == "tunneling") {
        if (!cfg.wall) throw ConfigError("tunneling mode needs a wall");
        std::unique_ptr<FoldedModel> fm;
        std::optional<Boundary> bd;
        if (cfg.wall->condensation) {
            auto& c = *cfg.wall->condensation;
            CondensationWall w = c.kind == "typeI" ? condensation_wall_typeI(c.N, c.n)
                                                   : condensation_wall_typeI_II(c.N, c.n, c.m);
            if (w.fm->G.n > kDenseFoldLimit) throw ConfigError("folded group of order " + std::to_string(w.fm->G.n) + " is too large");
            bd = make_boundary(w.fm->G, w.fm->omega, w.H, std::nullopt, w.thin, "library");
            fm = std::move(w.fm);
        } else {
            fm = fold(*cfg.wall->left, *cfg.wall->right);
            if (fm->G.n > kDenseFoldLimit) throw ConfigError("folded group of order " + std::to_string(fm->G.n) + " is too large");
            bd = boundary_from(fm->G, fm->omega, cfg.wall->boundary);
        }
        SemiTube s = build_semitube(*bd);
        TunnelingTable T = tunneling_table(*fm, s);
        if (fmt == "json") {
            json j;
            j["left"] = describe(fm->left);
            j["right"] = describe(fm->right);
            j["H"] = subgroup_text(fm->G, bd->H);
            j["rows"] = T.rows;
            j["cols"] = T.cols;
            j["m"] = T.m;
            j["kind"] = T.kind;
            out << j.dump(2) << "\n";
        } else if (fmt == "markdown") {
            out << table_markdown(T.rows, T.cols, T.m, &T.kind, "kind");
        } else {
            out << table_csv(T.rows, T.cols, T.m, &T.kind, "kind");
        }
        return 0;
    }
    if (!cfg.model) throw ConfigError("mode '" + cfg.mode + "' needs a group");
    const ModelSpec& ms = *cfg.model;
    const Group& G = ms.G;
    Cochain omega;
    try {
        omega = make_cocycle(G, ms.spec);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const std::out_of_range& e) {
        throw ConfigError(e.what());
    }
    Tube t;
    try {
        t = build_tube(G, omega, &ms.spec);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (cfg.mode == "anyons") {
        std::vector<std::string> names, cls;
        for (auto& b : t.anyons) {
            names.push_back(t.name(b));
            cls.push_back(G.element_name(b.base));
        }
        out << blocks_out(G, t.anyons, names, cls, "class", [&](int p) { return G.element_name(p); }, fmt);
        return 0;
    }
    if (cfg.mode == "gsd") {
        GsdReport r = torus_gsd(t);
        if (fmt == "json")
            out << json{{"gsd", r.rank}, {"anyons", t.anyons.size()}}.dump(2) << "\n";
        else
            out << r.rank << "\n";
        return 0;
    }
    if (!cfg.boundary) throw ConfigError("mode '" + cfg.mode + "' needs a boundary");
    Boundary bd = boundary_from(G, omega, *cfg.boundary);
    if (cfg.mode == "lagrangian") {
        auto L = lagrangian_algebra(t, bd);
        std::vector<std::string> rows;
        std::vector<std::vector<long>> m;
        for (auto [i, k] : L) {
            rows.push_back(t.name(t.anyons[i]));
            m.push_back({k});
        }
        if (fmt == "json") {
            json j = json::array();
            for (size_t i = 0; i < rows.size(); ++i) j.push_back({{"anyon", rows[i]}, {"multiplicity", m[i][0]}});
            out << j.dump(2) << "\n";
        } else if (fmt == "markdown") {
            out << table_markdown(rows, {"multiplicity"}, m);
        } else {
            out << table_csv(rows, {"multiplicity"}, m);
        }
        return 0;
    }
    SemiTube s = build_semitube(bd);
    if (cfg.mode == "boundary-anyons") {
        std::vector<std::string> names, dc;
        for (auto& b : s.anyons) {
            names.push_back(s.name(b));
            dc.push_back(s.double_coset_name(b));
        }
        int nc = s.nc();
        auto pname = [&](int p) {
            auto cn = [&](int a) { return G.element_name(bd.C.rep[a]) + "H"; };
            return "(" + cn(p / nc) + "," + cn(p % nc) + ")";
        };
        out << blocks_out(G, s.anyons, names, dc, "double_coset", pname, fmt);
        return 0;
    }
    // fusion-table
    FusionTable T = fusion_table(t, s, oracle);
    T.title = describe(ms) + "; H=" + subgroup_text(G, bd.H) + "; psi " + bd.provenance;
    if (fmt == "json")
        out << fusion_table_json(T);
    else if (fmt == "markdown")
        out << table_markdown(T.rows, T.cols, T.m);
    else
        out << table_csv(T.rows, T.cols, T.m);
    return 0;
}

int run(const ModelConfig& cfg, std::ostream& out, std::ostream& err, bool oracle) {
    try {
        std::ostringstream buf;  // emit nothing on failure
        int rc = run_inner(cfg, buf, oracle);
        out << buf.str();
        return rc;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const BoundaryInvalid& e) {
        err << "invalid boundary: " << e.what() << "\n";
        return 3;
    } catch (const NonIntegerMultiplicity& e) {
        err << "non-integer multiplicity: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace dw
