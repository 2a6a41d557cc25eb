#include "lcalg/specfile.hpp"

#include "lcalg/errors.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace lcalg {

namespace {

struct Entry {
    std::string key;
    std::string value;
    int line = 0;
    int key_col = 0;    // 1-based
    int value_off = 0;  // 0-based offset of the value's first character
    bool used = false;
};

struct Section {
    std::string kind;  // constants | algebra | module
    std::string name;
    int line = 0;
    std::vector<Entry> entries;
};

bool is_key_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s, std::size_t* lead = nullptr)
{
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    std::size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (lead) *lead = b;
    return s.substr(b, e - b);
}

std::vector<Section> lex(std::string_view text)
{
    std::vector<Section> sections;
    std::set<std::string> seen_sections;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        // cut the comment
        bool quoted = false;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] == '"') quoted = !quoted;
            if (raw[i] == '#' && !quoted) {
                raw = raw.substr(0, i);
                break;
            }
        }
        std::size_t lead = 0;
        std::string_view line = trim(raw, &lead);
        if (line.empty()) continue;
        const int col0 = static_cast<int>(lead) + 1;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("expected ']'", lineno, col0 + static_cast<int>(line.size()));
            std::string_view inner = trim(line.substr(1, line.size() - 2));
            Section s;
            s.line = lineno;
            if (inner == "constants" || inner == "algebra") {
                s.kind = std::string(inner);
            } else if (inner.substr(0, 7) == "module " && !trim(inner.substr(7)).empty()) {
                s.kind = "module";
                s.name = std::string(trim(inner.substr(7)));
            } else {
                throw ParseError("unknown section '" + std::string(inner) + "'", lineno, col0);
            }
            std::string tag = s.kind + " " + s.name;
            if (!seen_sections.insert(tag).second)
                throw DuplicateDefinition("section [" + std::string(inner) + "] defined twice", lineno, col0);
            sections.push_back(std::move(s));
            continue;
        }

        if (sections.empty()) throw ParseError("entry outside any section", lineno, col0);
        std::size_t eq = line.find('=');
        std::size_t k = 0;
        while (k < line.size() && is_key_char(line[k])) ++k;
        if (k == 0) throw ParseError("expected a key", lineno, col0);
        std::size_t after_key = k;
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
        if (eq == std::string_view::npos || k != eq) throw ParseError("expected '='", lineno, col0 + static_cast<int>(k));

        Entry e;
        e.key = std::string(line.substr(0, after_key));
        e.line = lineno;
        e.key_col = col0;
        std::size_t vlead = 0;
        std::string_view value = trim(line.substr(eq + 1), &vlead);
        int voff = static_cast<int>(lead + eq + 1 + vlead);
        if (value.empty()) throw ParseError("expected a value", lineno, voff + 1);
        if (value.front() == '"') {
            std::size_t close = value.find('"', 1);
            if (close == std::string_view::npos) throw ParseError("unterminated string", lineno, voff + 1);
            if (close != value.size() - 1)
                throw ParseError("unexpected text after string", lineno, voff + static_cast<int>(close) + 2);
            e.value = std::string(value.substr(1, close - 1));
            e.value_off = voff + 1;
        } else {
            e.value = std::string(value);
            e.value_off = voff;
        }
        for (const auto& other : sections.back().entries)
            if (other.key == e.key) throw DuplicateDefinition("key '" + e.key + "' defined twice", lineno, col0);
        sections.back().entries.push_back(std::move(e));
    }
    return sections;
}

std::vector<std::pair<std::string, int>> split_list(std::string_view text, char sep, int offset)
{
    std::vector<std::pair<std::string, int>> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] != sep) continue;
        std::size_t lead = 0;
        std::string_view item = trim(text.substr(start, i - start), &lead);
        out.emplace_back(std::string(item), offset + static_cast<int>(start + lead));
        start = i + 1;
    }
    return out;
}

// Keyed access to a section with unknown-key detection.
class Reader {
public:
    Reader(Section& s, const ConstantTable& constants) : s_(s), constants_(constants) {}

    Entry* find(std::string_view key)
    {
        for (auto& e : s_.entries)
            if (e.key == key) {
                e.used = true;
                return &e;
            }
        return nullptr;
    }

    Entry& require(std::string_view key)
    {
        Entry* e = find(key);
        if (!e) throw ParseError("missing key '" + std::string(key) + "' in [" + title() + "]", s_.line, 1);
        return *e;
    }

    MultiPoly poly(const Entry& e) const { return parse_poly(e.value, &constants_, e.line, e.value_off); }

    Scalar scalar(const Entry& e) const
    {
        MultiPoly p = poly(e);
        if (!p.is_constant()) throw ParseError("expected a constant", e.line, e.value_off + 1);
        return p.constant_term();
    }

    std::optional<Scalar> scalar(std::string_view key)
    {
        Entry* e = find(key);
        return e ? std::optional<Scalar>(scalar(*e)) : std::nullopt;
    }

    static int integer(const Entry& e)
    {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(e.value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != e.value.size()) throw ParseError("expected an integer", e.line, e.value_off + 1);
        return v;
    }

    std::optional<int> integer(std::string_view key)
    {
        Entry* e = find(key);
        return e ? std::optional<int>(integer(*e)) : std::nullopt;
    }

    static bool boolean(const Entry& e)
    {
        if (e.value == "true") return true;
        if (e.value == "false") return false;
        throw ParseError("expected true or false", e.line, e.value_off + 1);
    }

    std::vector<std::string> names(const Entry& e) const
    {
        std::vector<std::string> out;
        std::set<std::string> seen;
        for (auto& [item, off] : split_list(e.value, ',', e.value_off)) {
            if (item.empty()) throw ParseError("empty name", e.line, off + 1);
            if (!seen.insert(item).second) throw DuplicateDefinition("name '" + item + "' listed twice", e.line, off + 1);
            out.push_back(item);
        }
        return out;
    }

    std::vector<Scalar> scalars(const Entry& e) const
    {
        std::vector<Scalar> out;
        for (auto& [item, off] : split_list(e.value, ',', e.value_off)) {
            MultiPoly p = parse_poly(item, &constants_, e.line, off);
            if (!p.is_constant()) throw ParseError("expected a constant", e.line, off + 1);
            out.push_back(p.constant_term());
        }
        return out;
    }

    void finish() const
    {
        for (const auto& e : s_.entries)
            if (!e.used) throw ParseError("unknown key '" + e.key + "' in [" + title() + "]", e.line, e.key_col);
    }

    Section& section() { return s_; }

private:
    std::string title() const { return s_.name.empty() ? s_.kind : s_.kind + " " + s_.name; }

    Section& s_;
    const ConstantTable& constants_;
};

StructureConstants lie_algebra(const Entry& e)
{
    if (e.value == "sl2") return sl2_structure();
    if (e.value == "nonabelian2") return nonabelian2_structure();
    if (e.value.rfind("abelian:", 0) == 0) {
        Entry n = e;
        n.value = e.value.substr(8);
        n.value_off += 8;
        int dim = Reader::integer(n);
        if (dim < 1) throw ParseError("dimension must be positive", n.line, n.value_off + 1);
        return abelian_structure(static_cast<std::size_t>(dim));
    }
    throw ParseError("unknown Lie algebra '" + e.value + "'", e.line, e.value_off + 1);
}

std::vector<std::string> optional_labels(Reader& r)
{
    Entry* e = r.find("labels");
    return e ? r.names(*e) : std::vector<std::string>{};
}

// p_IJ, p_I_J or p_I_J_K
struct EntryKey {
    std::size_t i, j;
    std::optional<std::size_t> k;
};

std::optional<EntryKey> entry_key(const Entry& e)
{
    if (e.key.size() < 3 || e.key.compare(0, 2, "p_") != 0) return std::nullopt;
    std::string rest = e.key.substr(2);
    std::vector<std::size_t> idx;
    if (rest.size() == 2 && std::isdigit(static_cast<unsigned char>(rest[0])) &&
        std::isdigit(static_cast<unsigned char>(rest[1]))) {
        idx = {static_cast<std::size_t>(rest[0] - '0'), static_cast<std::size_t>(rest[1] - '0')};
    } else {
        for (auto& [item, off] : split_list(rest, '_', 0)) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("malformed bracket key '" + e.key + "'", e.line, e.key_col);
            idx.push_back(std::stoul(item));
        }
        if (idx.size() != 2 && idx.size() != 3)
            throw ParseError("malformed bracket key '" + e.key + "'", e.line, e.key_col);
    }
    EntryKey out{idx[0], idx[1], std::nullopt};
    if (idx.size() == 3) out.k = idx[2];
    return out;
}

ConformalAlgebra build_algebra(Section& s, const ConstantTable& constants)
{
    Reader r(s, constants);
    if (Entry* b = r.find("builtin")) {
        const std::string& name = b->value;
        std::optional<ConformalAlgebra> A;
        if (name == "virasoro") {
            A = virasoro();
        } else if (name == "current") {
            A = current(lie_algebra(r.require("lie")), optional_labels(r));
        } else if (name == "vir_semidirect") {
            Scalar a = r.scalar(r.require("a"));
            A = vir_semidirect_current(a, lie_algebra(r.require("lie")), optional_labels(r));
        } else if (name == "block") {
            Scalar p = r.scalar(r.require("p"));
            A = block(p, Reader::integer(r.require("truncation")));
        } else if (name == "map_virasoro") {
            auto trunc = r.integer("truncation");
            auto quot = r.integer("quotient");
            if (trunc.has_value() == quot.has_value())
                throw ParseError("map_virasoro takes exactly one of truncation, quotient", b->line, b->key_col);
            A = trunc ? map_virasoro_polynomial(*trunc) : map_virasoro(truncated_polynomial_algebra(*quot));
        } else {
            throw ParseError("unknown builtin algebra '" + name + "'", b->line, b->value_off + 1);
        }
        r.finish();
        return *A;
    }

    Entry& gens = r.require("generators");
    std::vector<std::string> labels = r.names(gens);
    std::optional<Grading> grading;
    if (Entry* g = r.find("grades")) {
        grading.emplace();
        for (auto& [item, off] : split_list(g->value, ',', g->value_off)) {
            Entry one{"", item, g->line, g->key_col, off};
            grading->grades.push_back(Reader::integer(one));
        }
        if (grading->grades.size() != labels.size())
            throw ParseError("grades and generators differ in length", g->line, g->value_off + 1);
    }
    if (Entry* t = r.find("truncation")) {
        if (!grading) throw ParseError("truncation needs grades", t->line, t->key_col);
        grading->truncation = Reader::integer(*t);
    }

    ConformalAlgebra::Table table;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> defined;
    for (auto& e : r.section().entries) {
        if (e.used) continue;
        auto key = entry_key(e);
        if (!key) continue;  // left for finish() to report
        e.used = true;
        for (std::size_t g : {key->i, key->j})
            if (g >= labels.size())
                throw UnknownGenerator("no generator with index " + std::to_string(g), e.line, e.key_col);
        std::size_t target = 0;
        if (key->k) {
            target = *key->k;
            if (target >= labels.size())
                throw UnknownGenerator("no generator with index " + std::to_string(target), e.line, e.key_col);
        } else if (!grading && labels.size() == 1) {
            target = 0;
        } else {
            if (!grading) throw ParseError("'" + e.key + "' needs grades; use p_I_J_K", e.line, e.key_col);
            int want = grading->grades[key->i] + grading->grades[key->j];
            std::optional<std::size_t> hit;
            for (std::size_t g = 0; g < labels.size(); ++g)
                if (grading->grades[g] == want) {
                    if (hit) throw ParseError("grade " + std::to_string(want) + " is not unique; use p_I_J_K", e.line,
                                              e.key_col);
                    hit = g;
                }
            if (!hit) throw UnknownGenerator("no generator of grade " + std::to_string(want), e.line, e.key_col);
            target = *hit;
        }
        if (!defined.insert({key->i, key->j, target}).second)
            throw DuplicateDefinition("bracket entry '" + e.key + "' defined twice", e.line, e.key_col);
        MultiPoly p = r.poly(e);
        auto& slot = table[{key->i, key->j}];
        if (!p.is_zero()) slot[target] = p;
    }
    r.finish();
    return ConformalAlgebra(std::move(labels), std::move(table), std::move(grading));
}

ModuleSpec build_module(Section& s, const ConformalAlgebra& A, const ConstantTable& constants)
{
    Reader r(s, constants);
    auto generator_named = [&](const Entry& e) {
        auto g = A.index_of(e.value);
        if (!g) throw UnknownGenerator("unknown generator '" + e.value + "'", e.line, e.value_off + 1);
        return *g;
    };

    std::optional<GenIndex> vir;
    if (Entry* v = r.find("virasoro")) vir = generator_named(*v);
    bool cnt = false;
    if (Entry* c = r.find("completely_nontrivial")) cnt = Reader::boolean(*c);

    std::optional<ConformalModule> M;
    if (Entry* b = r.find("builtin")) {
        const std::string& name = b->value;
        if (name == "rank_one_vir") {
            Scalar a = r.scalar(r.require("a"));
            Scalar bb = r.scalar(r.require("b"));
            if (A.size() != 1) throw ParseError("rank_one_vir needs a one-generator algebra", b->line, b->value_off + 1);
            M = rank_one_vir(a, bb);
        } else if (name == "theorem") {
            int which = Reader::integer(r.require("case"));
            if (which != 1 && which != 2) throw ParseError("case must be 1 or 2", b->line, b->value_off + 1);
            TheoremParams p;
            p.delta = r.scalar(r.require("delta"));
            p.c = r.scalar("c").value_or(Scalar(0));
            p.gamma = r.scalar("gamma").value_or(Scalar(0));
            if (Entry* ci = r.find("ci")) p.ci = r.scalars(*ci);
            M = rank_one_theorem_module(A, which == 1 ? TheoremCase::A1NotTwo : TheoremCase::A1Two, p);
        } else if (name == "adjoint") {
            M = adjoint_module(A);
        } else if (name == "trivial") {
            int rank = r.integer("rank").value_or(1);
            if (rank < 1) throw ParseError("rank must be positive", b->line, b->value_off + 1);
            M = trivial_module(A, static_cast<std::size_t>(rank));
        } else {
            throw ParseError("unknown builtin module '" + name + "'", b->line, b->value_off + 1);
        }
    } else {
        Entry& basis_entry = r.require("basis");
        std::vector<std::string> basis = r.names(basis_entry);
        std::map<GenIndex, ActionMatrix> actions;
        for (auto& e : r.section().entries) {
            if (e.used) continue;
            std::optional<GenIndex> g;
            if (e.key.rfind("act_", 0) == 0 && e.key.size() > 4 &&
                e.key.find_first_not_of("0123456789", 4) == std::string::npos) {
                g = std::stoul(e.key.substr(4));
                if (*g >= A.size())
                    throw UnknownGenerator("no generator with index " + e.key.substr(4), e.line, e.key_col);
            } else {
                g = A.index_of(e.key);
                if (!g) throw UnknownGenerator("unknown generator '" + e.key + "'", e.line, e.key_col);
            }
            e.used = true;
            if (actions.count(*g))
                throw DuplicateDefinition("action of '" + A.labels()[*g] + "' defined twice", e.line, e.key_col);
            ActionMatrix m = parse_poly_rows(e.value, &constants, e.line, e.value_off);
            bool square = m.size() == basis.size();
            for (const auto& row : m) square = square && row.size() == basis.size();
            if (!square)
                throw ParseError("expected a " + std::to_string(basis.size()) + "x" + std::to_string(basis.size()) +
                                     " matrix",
                                 e.line, e.value_off + 1);
            actions[*g] = std::move(m);
        }
        M = ConformalModule(std::move(basis), std::move(actions));
    }
    r.finish();
    return ModuleSpec{s.name, std::move(*M), vir, cnt};
}

}  // namespace

std::vector<std::vector<MultiPoly>> parse_poly_rows(std::string_view text, const ConstantTable* constants, int line,
                                                    int column_offset)
{
    std::vector<std::vector<MultiPoly>> rows;
    for (auto& [row, roff] : split_list(text, ';', column_offset)) {
        std::vector<MultiPoly> out;
        for (auto& [item, off] : split_list(row, ',', roff)) out.push_back(parse_poly(item, constants, line, off));
        rows.push_back(std::move(out));
    }
    return rows;
}

const ModuleSpec& SpecFile::module(std::string_view name) const
{
    if (modules.empty()) throw SpecError("the spec declares no module");
    if (name.empty()) return modules.front();
    for (const auto& m : modules)
        if (m.name == name) return m;
    throw SpecError("no module named '" + std::string(name) + "'");
}

SpecFile parse_spec(std::string_view text)
{
    std::vector<Section> sections = lex(text);
    ConstantTable constants;
    for (auto& s : sections) {
        if (s.kind != "constants") continue;
        for (auto& e : s.entries) constants[e.key] = parse_poly(e.value, &constants, e.line, e.value_off);
    }
    Section* alg = nullptr;
    for (auto& s : sections)
        if (s.kind == "algebra") alg = &s;
    if (!alg) throw ParseError("missing [algebra] section", 0, 0);

    SpecFile out{constants, build_algebra(*alg, constants), {}};
    for (auto& s : sections)
        if (s.kind == "module") out.modules.push_back(build_module(s, out.algebra, out.constants));
    return out;
}

SpecFile load_spec(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

}  // namespace lcalg
