#include "cdesc/fixture.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace cdesc {

using json = nlohmann::json;

namespace {

std::string describe(const std::vector<FixtureIssue>& issues) {
    std::string out = "fixture validation failed";
    for (const auto& i : issues) out += "\n  " + i.location + ": [" + i.invariant + "] " + i.message;
    return out;
}

}  // namespace

FixtureError::FixtureError(std::vector<FixtureIssue> issues) : Error(describe(issues)), issues_(std::move(issues)) {}

bool FixtureError::names(std::string_view invariant) const {
    for (const auto& i : issues_)
        if (i.invariant == invariant) return true;
    return false;
}

const PairSpec& Fixture::pair(const std::string& name) const {
    auto it = pairs.find(name);
    if (it == pairs.end()) throw UnknownNameError("no pair named '" + name + "'");
    return it->second;
}

const MorphismSpec& Fixture::morphism(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end()) throw UnknownNameError("no morphism named '" + name + "'");
    return it->second;
}

const SquareSpec& Fixture::square(const std::string& name) const {
    auto it = squares.find(name);
    if (it == squares.end()) throw UnknownNameError("no square named '" + name + "'");
    return it->second;
}

namespace {

std::string pointer(const std::string& section, const std::string& name = {}) {
    std::string out = "/" + section;
    if (!name.empty()) out += "/" + name;
    return out;
}

class Loader {
public:
    /// Runs one entry; failures are recorded and the entry skipped.
    void entry(const std::string& location, const std::function<void()>& body) {
        try {
            body();
        } catch (const InvariantViolation& e) {
            issues_.push_back({location, e.invariant(), e.what()});
        } catch (const UnknownNameError& e) {
            issues_.push_back({location, "reference", e.what()});
        } catch (const IncompleteMorphismError& e) {
            issues_.push_back({location, "incomplete-morphism", e.what()});
        } catch (const InvalidMapError& e) {
            issues_.push_back({location, "chain-map", e.what()});
        } catch (const DiagramError& e) {
            issues_.push_back({location, "diagram", e.what()});
        } catch (const ParseError& e) {
            issues_.push_back({location, "syntax", e.what()});
        } catch (const Error& e) {
            issues_.push_back({location, "fixture", e.what()});
        } catch (const json::exception& e) {
            issues_.push_back({location, "schema", e.what()});
        }
    }

    void finish() const {
        if (!issues_.empty()) throw FixtureError(issues_);
    }

private:
    std::vector<FixtureIssue> issues_;
};

const json& section(const json& doc, const char* key) {
    static const json empty = json::object();
    auto it = doc.find(key);
    return it == doc.end() ? empty : *it;
}

void require_keys(const json& j, std::initializer_list<const char*> required, std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) throw InvariantViolation("schema", "entry must be an object");
    for (const char* k : required)
        if (!j.contains(k)) throw InvariantViolation("schema", std::string("missing key '") + k + "'");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : required) known = known || item.key() == k;
        for (const char* k : optional) known = known || item.key() == k;
        if (!known) throw InvariantViolation("schema", "unknown key '" + item.key() + "'");
    }
}

Matrix read_matrix(const json& j, std::size_t rows, std::size_t cols) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : j) {
        std::vector<std::string> r;
        for (const auto& cell : row) {
            if (cell.is_string()) r.push_back(cell.get<std::string>());
            else if (cell.is_number_integer()) r.push_back(std::to_string(cell.get<long>()));
            else throw ParseError("matrix entries must be rational strings");
        }
        cells.push_back(std::move(r));
    }
    Matrix m = Matrix::from_strings(cells, cols);
    if (m.rows() != rows || m.cols() != cols)
        throw InvalidMapError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                              std::to_string(rows) + "x" + std::to_string(cols));
    return m;
}

json write_matrix(const Matrix& m) {
    json out = json::array();
    for (const auto& row : m.to_strings()) out.push_back(row);
    return out;
}

QComplex read_complex(const json& j) {
    require_keys(j, {"lo", "dims", "d"});
    const int lo = j.at("lo").get<int>();
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    const json& d = j.at("d");
    const std::size_t expected = dims.empty() ? 0 : dims.size() - 1;
    if (d.size() != expected)
        throw InvalidMapError("complex with " + std::to_string(dims.size()) + " degrees needs " +
                              std::to_string(expected) + " differentials");
    std::vector<Matrix> diffs;
    for (std::size_t i = 0; i < expected; ++i) diffs.push_back(read_matrix(d[i], dims[i + 1], dims[i]));
    return QComplex(lo, dims, diffs);
}

json write_complex(const QComplex& c) {
    json dims = json::array(), d = json::array();
    for (int k = c.lo(); k <= c.hi(); ++k) dims.push_back(c.dim(k));
    for (int k = c.lo(); k < c.hi(); ++k) d.push_back(write_matrix(c.d(k)));
    return {{"lo", c.is_zero() ? 0 : c.lo()}, {"dims", dims}, {"d", d}};
}

CubicalOrder read_shape(const json& j) {
    std::vector<CubeIndex> members;
    std::size_t arity = 0;
    bool first = true;
    for (const auto& s : j) {
        const std::string bits = s.get<std::string>();
        if (!first && bits.size() != arity) throw ParseError("shape members must have equal length");
        arity = bits.size();
        first = false;
        members.push_back(CubeIndex::parse(bits));
    }
    return CubicalOrder(members, arity);
}

EdgeKey read_edge_key(const std::string& text) {
    const auto arrow = text.find("->");
    if (arrow == std::string::npos) throw ParseError("edge key '" + text + "' must read 'a->b'");
    return {CubeIndex::parse(text.substr(0, arrow)), CubeIndex::parse(text.substr(arrow + 2))};
}

Bidegree read_bidegree(const std::string& text) {
    Bidegree b;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> b.k >> c1 >> b.p >> c2 >> b.q) || c1 != ',' || c2 != ',' || !in.eof())
        throw ParseError("bidegree '" + text + "' must read 'k,p,q'");
    return b;
}

std::pair<Subset, Subset> read_strata_key(const std::string& text) {
    const auto bar = text.find('|');
    if (bar == std::string::npos) throw ParseError("strata map key '" + text + "' must read 'sigma|tau'");
    return {parse_subset(text.substr(0, bar)), parse_subset(text.substr(bar + 1))};
}

Presentation read_presentation(const json& j) {
    Presentation p;
    if (j.is_string()) {
        p.kind = Presentation::Kind::atom;
        p.atom = j.get<std::string>();
        return p;
    }
    if (!j.is_object() || j.size() != 1) throw InvariantViolation("schema", "a variety is one of atom, minus, union, bundle, class");
    const auto& [key, value] = *j.items().begin();
    if (key == "atom") {
        p.kind = Presentation::Kind::atom;
        p.atom = value.get<std::string>();
    } else if (key == "minus" || key == "union" || key == "bundle") {
        p.kind = key == "minus" ? Presentation::Kind::minus
                 : key == "union" ? Presentation::Kind::unite
                                  : Presentation::Kind::bundle;
        p.parts = value.get<std::vector<std::string>>();
    } else if (key == "class") {
        p.kind = Presentation::Kind::given;
        p.cls = parse_class(value.get<std::string>());
    } else {
        throw InvariantViolation("schema", "unknown variety form '" + key + "'");
    }
    return p;
}

json write_presentation(const Presentation& p) {
    switch (p.kind) {
        case Presentation::Kind::atom: return {{"atom", p.atom}};
        case Presentation::Kind::minus: return {{"minus", p.parts}};
        case Presentation::Kind::unite: return {{"union", p.parts}};
        case Presentation::Kind::bundle: return {{"bundle", p.parts}};
        case Presentation::Kind::given: return {{"class", p.cls.to_string()}};
    }
    return nullptr;
}

bool read_control(const json& j) { return j.contains("negative_control") && j.at("negative_control").get<bool>(); }

}  // namespace

Fixture parse_fixture(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("fixture is not well-formed: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("fixture must be a JSON object");

    Fixture fx;
    Loader loader;
    loader.entry("/", [&] {
        require_keys(doc, {}, {"atoms", "relations", "complexes", "maps", "diagrams", "varieties", "pairs", "morphisms",
                               "compositions", "blowups", "squares", "class_squares", "independence"});
    });

    const json& atoms = section(doc, "atoms");
    for (std::size_t i = 0; i < atoms.size(); ++i)
        loader.entry(pointer("atoms", std::to_string(i)), [&] {
            const json& a = atoms[i];
            require_keys(a, {"name", "dim", "hodge"});
            Atom atom;
            atom.name = a.at("name").get<std::string>();
            atom.dim = a.at("dim").get<int>();
            for (const auto& e : a.at("hodge")) {
                const auto v = e.get<std::vector<long>>();
                if (v.size() != 4) throw InvariantViolation("schema", "hodge entries are [k, p, q, h]");
                atom.hodge.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]), v[3]});
            }
            fx.atoms.add(std::move(atom));
        });

    loader.entry("/relations", [&] {
        std::vector<Relation> rules;
        for (const auto& r : section(doc, "relations")) rules.push_back(parse_relation(r.get<std::string>()));
        fx.relations = RelationSet(fx.atoms, std::move(rules));
    });

    for (const auto& [name, c] : section(doc, "complexes").items())
        loader.entry(pointer("complexes", name), [&] { fx.complexes.emplace(name, read_complex(c)); });

    for (const auto& [name, m] : section(doc, "maps").items())
        loader.entry(pointer("maps", name), [&] {
            require_keys(m, {"source", "target", "components"});
            const std::string s = m.at("source").get<std::string>(), t = m.at("target").get<std::string>();
            if (!fx.complexes.count(s)) throw UnknownNameError("unknown complex '" + s + "'");
            if (!fx.complexes.count(t)) throw UnknownNameError("unknown complex '" + t + "'");
            const QComplex& src = fx.complexes.at(s);
            const QComplex& tgt = fx.complexes.at(t);
            std::map<int, Matrix> comps;
            for (const auto& [k, mat] : m.at("components").items()) {
                const int degree = std::stoi(k);
                comps.emplace(degree, read_matrix(mat, tgt.dim(degree), src.dim(degree)));
            }
            fx.maps.emplace(name, NamedMap{s, t, ChainMap(src, tgt, std::move(comps))});
        });

    for (const auto& [name, d] : section(doc, "diagrams").items())
        loader.entry(pointer("diagrams", name), [&] {
            require_keys(d, {"shape"}, {"vertices", "edges"});
            const CubicalOrder shape = read_shape(d.at("shape"));
            std::map<CubeIndex, std::string> vrefs;
            std::map<EdgeKey, std::string> erefs;
            std::map<CubeIndex, QComplex> vertices;
            std::map<EdgeKey, ChainMap> edges;
            for (const auto& [key, ref] : section(d, "vertices").items()) {
                const CubeIndex a = CubeIndex::parse(key);
                const std::string r = ref.get<std::string>();
                if (!fx.complexes.count(r)) throw UnknownNameError("unknown complex '" + r + "'");
                vrefs.emplace(a, r);
                vertices.emplace(a, fx.complexes.at(r));
            }
            for (const auto& [key, ref] : section(d, "edges").items()) {
                const EdgeKey e = read_edge_key(key);
                const std::string r = ref.get<std::string>();
                if (!fx.maps.count(r)) throw UnknownNameError("unknown map '" + r + "'");
                erefs.emplace(e, r);
                edges.emplace(e, fx.maps.at(r).map);
            }
            fx.diagrams.emplace(name, DiagramSpec{vrefs, erefs, CubicalDiagram(shape, vertices, edges)});
        });

    loader.entry("/varieties", [&] {
        std::map<std::string, Presentation> entries;
        for (const auto& [name, v] : section(doc, "varieties").items()) entries.emplace(name, read_presentation(v));
        fx.varieties = VarietyCatalog(fx.atoms, std::move(entries));
    });

    for (const auto& [name, p] : section(doc, "pairs").items())
        loader.entry(pointer("pairs", name), [&] {
            require_keys(p, {"ambient", "components", "strata"}, {"open_part"});
            std::map<Subset, std::string> strata;
            for (const auto& [key, atom] : p.at("strata").items()) strata.emplace(parse_subset(key), atom.get<std::string>());
            PairSpec spec{SNCPair(fx.atoms, p.at("ambient").get<std::string>(),
                                  p.at("components").get<std::vector<std::string>>(), std::move(strata)),
                          std::nullopt};
            if (p.contains("open_part")) spec.open_part = p.at("open_part").get<std::string>();
            const GysinComplex g(spec.pair);
            if (g.gamma_squared_defects() != 0) throw InvariantViolation("gamma^2=0", "Gysin differential squares to nonzero");
            fx.pairs.emplace(name, std::move(spec));
        });

    for (const auto& [name, m] : section(doc, "morphisms").items())
        loader.entry(pointer("morphisms", name), [&] {
            require_keys(m, {"source", "target", "M"}, {"ambient_map", "strata_maps"});
            const std::string s = m.at("source").get<std::string>(), t = m.at("target").get<std::string>();
            std::map<StrataKey, std::string> maps;
            for (const auto& [key, ref] : section(m, "strata_maps").items())
                maps.emplace(read_strata_key(key), ref.get<std::string>());
            PairMorphism f(fx.pair(s).pair, fx.pair(t).pair, m.at("M").get<IntMatrix>(), std::move(maps),
                           m.contains("ambient_map") ? m.at("ambient_map").get<std::string>() : "f");
            induced_morphism(f);
            fx.morphisms.emplace(name, MorphismSpec{s, t, std::move(f)});
        });

    for (const auto& [name, c] : section(doc, "compositions").items())
        loader.entry(pointer("compositions", name), [&] {
            require_keys(c, {"composite", "f", "g"});
            CompositionSpec spec{c.at("composite").get<std::string>(), c.at("f").get<std::string>(),
                                 c.at("g").get<std::string>()};
            const auto& f = fx.morphism(spec.f);
            const auto& g = fx.morphism(spec.g);
            const auto& h = fx.morphism(spec.composite);
            if (f.source != g.target || h.source != g.source || h.target != f.target)
                throw InvariantViolation("composable", "composite must run from g's source to f's target through f's source");
            fx.compositions.emplace(name, std::move(spec));
        });

    for (const auto& [name, b] : section(doc, "blowups").items())
        loader.entry(pointer("blowups", name), [&] {
            require_keys(b, {"x", "y", "x_tilde", "y_tilde", "codim"});
            BlowupSquare sq{b.at("x").get<std::string>(), b.at("y").get<std::string>(), b.at("x_tilde").get<std::string>(),
                            b.at("y_tilde").get<std::string>(), b.at("codim").get<int>()};
            manin_decomposition(fx.atoms, fx.relations, sq);
            fx.blowups.emplace(name, std::move(sq));
        });

    for (const auto& [name, s] : section(doc, "squares").items())
        loader.entry(pointer("squares", name), [&] {
            require_keys(s, {"blowup", "maps"}, {"negative_control"});
            const std::string b = s.at("blowup").get<std::string>();
            auto it = fx.blowups.find(b);
            if (it == fx.blowups.end()) throw UnknownNameError("unknown blowup '" + b + "'");
            const BlowupSquare& sq = it->second;
            std::map<Bidegree, SquareMaps> maps;
            for (const auto& [key, m] : s.at("maps").items()) {
                require_keys(m, {"i", "f", "g", "j"});
                const Bidegree bd = read_bidegree(key);
                const std::size_t x = hodge_number(fx.atoms.at(sq.x), bd), y = hodge_number(fx.atoms.at(sq.y), bd),
                                  xt = hodge_number(fx.atoms.at(sq.x_tilde), bd),
                                  yt = hodge_number(fx.atoms.at(sq.y_tilde), bd);
                maps.emplace(bd, SquareMaps{read_matrix(m.at("i"), y, x), read_matrix(m.at("f"), xt, x),
                                            read_matrix(m.at("g"), yt, y), read_matrix(m.at("j"), yt, xt)});
            }
            fx.squares.emplace(name, SquareSpec{b, RealizedSquare(fx.atoms, sq, std::move(maps)), read_control(s)});
        });

    auto check_variety = [&](const std::string& ref) {
        if (!fx.varieties.contains(ref) && !fx.atoms.contains(ref))
            throw UnknownNameError("unknown variety '" + ref + "'");
    };
    for (const auto& [name, s] : section(doc, "class_squares").items())
        loader.entry(pointer("class_squares", name), [&] {
            require_keys(s, {"x", "y", "x_tilde", "y_tilde"}, {"negative_control"});
            ClassSquare sq{s.at("x").get<std::string>(), s.at("y").get<std::string>(), s.at("x_tilde").get<std::string>(),
                           s.at("y_tilde").get<std::string>()};
            for (const auto* ref : {&sq.x, &sq.y, &sq.x_tilde, &sq.y_tilde}) check_variety(*ref);
            fx.class_squares.emplace(name, ClassSquareSpec{std::move(sq), read_control(s)});
        });

    for (const auto& [name, e] : section(doc, "independence").items())
        loader.entry(pointer("independence", name), [&] {
            require_keys(e, {"pairs", "open_part"}, {"negative_control"});
            const auto refs = e.at("pairs").get<std::vector<std::string>>();
            if (refs.size() != 2) throw InvariantViolation("schema", "independence compares exactly two pairs");
            IndependenceSpec spec{refs[0], refs[1], e.at("open_part").get<std::string>(), read_control(e)};
            for (const auto* ref : {&spec.a, &spec.b}) {
                const PairSpec& p = fx.pair(*ref);
                if (p.open_part && *p.open_part != spec.open_part)
                    throw InvariantViolation("open-part", "pair '" + *ref + "' declares open part '" + *p.open_part +
                                                              "', entry declares '" + spec.open_part + "'");
            }
            fx.independence.emplace(name, std::move(spec));
        });

    loader.finish();
    return fx;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open fixture '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_fixture(buffer.str());
}

std::string dump_fixture(const Fixture& fx) {
    json doc = json::object();

    json atoms = json::array();
    for (const auto& name : fx.atoms.names()) {
        const Atom& a = fx.atoms.at(name);
        json hodge = json::array();
        for (const auto& e : a.hodge) hodge.push_back({e.k, e.p, e.q, e.h});
        atoms.push_back({{"name", a.name}, {"dim", a.dim}, {"hodge", hodge}});
    }
    doc["atoms"] = atoms;

    json relations = json::array();
    for (const auto& r : fx.relations.rules()) relations.push_back("[" + r.atom + "] -> " + r.rhs.to_string());
    doc["relations"] = relations;

    json complexes = json::object();
    for (const auto& [name, c] : fx.complexes) complexes[name] = write_complex(c);
    doc["complexes"] = complexes;

    json maps = json::object();
    for (const auto& [name, m] : fx.maps) {
        json comps = json::object();
        for (int k : m.map.degrees()) comps[std::to_string(k)] = write_matrix(m.map.component(k));
        maps[name] = {{"source", m.source}, {"target", m.target}, {"components", comps}};
    }
    doc["maps"] = maps;

    json diagrams = json::object();
    for (const auto& [name, d] : fx.diagrams) {
        const std::size_t arity = d.diagram.shape().arity();
        json vertices = json::object(), edges = json::object();
        for (const auto& [a, ref] : d.vertices) vertices[a.to_string(arity)] = ref;
        for (const auto& [e, ref] : d.edges) edges[e.first.to_string(arity) + "->" + e.second.to_string(arity)] = ref;
        diagrams[name] = {{"shape", d.diagram.shape().to_strings()}, {"vertices", vertices}, {"edges", edges}};
    }
    doc["diagrams"] = diagrams;

    json varieties = json::object();
    for (const auto& [name, p] : fx.varieties.entries()) varieties[name] = write_presentation(p);
    doc["varieties"] = varieties;

    json pairs = json::object();
    for (const auto& [name, p] : fx.pairs) {
        json strata = json::object();
        for (const auto& [sigma, atom] : p.pair.declared_strata()) strata[subset_key(sigma)] = atom;
        json entry = {{"ambient", p.pair.ambient()}, {"components", p.pair.components()}, {"strata", strata}};
        if (p.open_part) entry["open_part"] = *p.open_part;
        pairs[name] = entry;
    }
    doc["pairs"] = pairs;

    json morphisms = json::object();
    for (const auto& [name, m] : fx.morphisms) {
        json strata = json::object();
        for (const auto& [key, ref] : m.morphism.strata_maps()) strata[subset_key(key.first) + "|" + subset_key(key.second)] = ref;
        morphisms[name] = {{"source", m.source},
                           {"target", m.target},
                           {"M", m.morphism.multiplicities()},
                           {"ambient_map", m.morphism.ambient_map()},
                           {"strata_maps", strata}};
    }
    doc["morphisms"] = morphisms;

    json compositions = json::object();
    for (const auto& [name, c] : fx.compositions) compositions[name] = {{"composite", c.composite}, {"f", c.f}, {"g", c.g}};
    doc["compositions"] = compositions;

    json blowups = json::object();
    for (const auto& [name, b] : fx.blowups)
        blowups[name] = {{"x", b.x}, {"y", b.y}, {"x_tilde", b.x_tilde}, {"y_tilde", b.y_tilde}, {"codim", b.codim}};
    doc["blowups"] = blowups;

    json squares = json::object();
    for (const auto& [name, s] : fx.squares) {
        json maps_json = json::object();
        for (const auto& [bd, m] : s.square.maps())
            maps_json[bd.to_string()] = {
                {"i", write_matrix(m.i)}, {"f", write_matrix(m.f)}, {"g", write_matrix(m.g)}, {"j", write_matrix(m.j)}};
        json entry = {{"blowup", s.blowup}, {"maps", maps_json}};
        if (s.negative_control) entry["negative_control"] = true;
        squares[name] = entry;
    }
    doc["squares"] = squares;

    json class_squares = json::object();
    for (const auto& [name, s] : fx.class_squares) {
        json entry = {{"x", s.square.x}, {"y", s.square.y}, {"x_tilde", s.square.x_tilde}, {"y_tilde", s.square.y_tilde}};
        if (s.negative_control) entry["negative_control"] = true;
        class_squares[name] = entry;
    }
    doc["class_squares"] = class_squares;

    json independence = json::object();
    for (const auto& [name, e] : fx.independence) {
        json entry = {{"pairs", {e.a, e.b}}, {"open_part", e.open_part}};
        if (e.negative_control) entry["negative_control"] = true;
        independence[name] = entry;
    }
    doc["independence"] = independence;

    return doc.dump(2) + "\n";
}

}  // namespace cdesc
