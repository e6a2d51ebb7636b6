#include "pqr/ingest.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "pqr/action.hpp"
#include "pqr/gf.hpp"
#include "pqr/lifting.hpp"
#include "pqr/structure.hpp"

#ifndef PQR_CORPUS_DEFAULT_DIR
#define PQR_CORPUS_DEFAULT_DIR "data"
#endif

namespace pqr {

namespace {

// Cursor over one already-comment-stripped line.  Columns are 1-indexed and
// refer to the raw line, which is why the comment strip must not shift text.
struct LineCursor {
    const std::string& s;
    int line;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    int col() {
        skip_ws();
        return int(pos) + 1;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col()); }

    void expect(char c, const std::string& what) {
        if (peek() != c) fail("expected " + what);
        ++pos;
    }
    // run of non-whitespace; empty at end of line
    std::string token() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
    std::uint64_t integer(const std::string& what) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected " + what);
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            if (v > (UINT64_MAX - 9) / 10) fail(what + " does not fit in 64 bits");
            v = v * 10 + std::uint64_t(s[pos] - '0');
            ++pos;
        }
        return v;
    }
    // remainder of the line, trimmed
    std::string rest() {
        skip_ws();
        std::size_t end = s.size();
        while (end > pos && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
        std::string r = s.substr(pos, end - pos);
        pos = s.size();
        return r;
    }
    void end_of_line() {
        if (!done()) fail("trailing input after the directive");
    }
};

std::string stripped(const std::string& raw) {
    auto h = raw.find('#');
    return h == std::string::npos ? raw : raw.substr(0, h);
}

std::vector<std::vector<unsigned>> parse_cycles(LineCursor& c, unsigned degree) {
    std::vector<std::vector<unsigned>> cycles;
    std::vector<char> used(std::size_t(degree) + 1, 0);
    if (c.peek() != '(') c.fail("expected '(' to open a cycle");
    while (!c.done()) {
        c.expect('(', "'(' to open a cycle");
        std::vector<unsigned> cyc;
        while (true) {
            char ch = c.peek();
            if (ch == ')') {
                ++c.pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                c.fail("expected a point or ')' to close the cycle");
            int pcol = c.col();
            std::uint64_t pt = c.integer("a point");
            if (pt < 1 || pt > degree)
                throw ParseError("point out of range for the declared degree", c.line, pcol);
            if (used[pt]) throw ParseError("duplicate point in a generator", c.line, pcol);
            used[pt] = 1;
            cyc.push_back(unsigned(pt));
        }
        if (cyc.empty()) c.fail("empty cycle");
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::vector<unsigned> parse_matrix(LineCursor& c, unsigned dim, unsigned entry_bound) {
    c.expect('[', "'[' to open the matrix");
    std::vector<unsigned> entries;
    unsigned rows = 0;
    int mcol = c.col();
    while (true) {
        int rcol = c.col();
        c.expect('[', "'[' to open a matrix row");
        unsigned len = 0;
        while (true) {
            if (len) {
                if (c.peek() != ',') break;
                ++c.pos;
            }
            int ecol = c.col();
            std::uint64_t v = c.integer("a matrix entry");
            if (v >= entry_bound)
                throw ParseError("matrix entry out of range for the coefficient ring", c.line, ecol);
            entries.push_back(unsigned(v));
            ++len;
        }
        c.expect(']', "']' to close the row");
        if (len != dim)
            throw ParseError("ragged matrix: row has " + std::to_string(len) +
                                 " entries, expected " + std::to_string(dim),
                             c.line, rcol);
        ++rows;
        if (c.peek() == ',') {
            ++c.pos;
            continue;
        }
        break;
    }
    c.expect(']', "']' to close the matrix");
    if (rows != dim)
        throw ParseError("matrix has " + std::to_string(rows) + " rows, expected " +
                             std::to_string(dim),
                         c.line, mcol);
    return entries;
}

// shared by the mod/field headers: dim in [1,6] (determinant support) and a
// module small enough to act on
void check_matrix_header(LineCursor& c, std::uint64_t base, std::uint64_t dim, int dimcol) {
    if (dim < 1 || dim > 6)
        throw ParseError("dimension must be between 1 and 6", c.line, dimcol);
    std::uint64_t points = 1;
    for (unsigned i = 0; i < dim; ++i) {
        if (points > Perm::kMaxDegree / base)
            throw ParseError("module has too many points for the permutation degree cap", c.line,
                             dimcol);
        points *= base;
    }
}

std::unique_ptr<Ring> ring_of(const GroupSpec& spec) {
    if (spec.kind == GroupSpec::Kind::matrix_mod_m) return std::make_unique<Zmod>(spec.modulus);
    auto f = factorize(spec.field_q);
    return std::make_unique<GFq>(unsigned(f[0].first), f[0].second);
}

}  // namespace

GroupSpec parse_group_file(const std::string& text) {
    GroupSpec spec;
    bool have_header = false;
    std::set<std::string> seen;
    std::unique_ptr<Ring> ring;  // built once the header is a matrix kind

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string body = stripped(raw);
        LineCursor c{body, lineno};
        if (c.done()) continue;
        int dcol = c.col();
        std::string dir = c.token();

        if (dir == "name") {
            if (have_header) throw ParseError("name must precede the header", lineno, dcol);
            if (!spec.name.empty()) throw ParseError("duplicate name directive", lineno, dcol);
            spec.name = c.rest();
            if (spec.name.empty()) c.fail("expected a name");
        } else if (dir == "degree" || dir == "mod" || dir == "field") {
            if (have_header) throw ParseError("duplicate header line", lineno, dcol);
            if (dir == "degree") {
                spec.kind = GroupSpec::Kind::perm_cycles;
                int ncol = c.col();
                std::uint64_t n = c.integer("the degree");
                if (n < 1 || n > Perm::kMaxDegree)
                    throw ParseError("degree out of range", lineno, ncol);
                spec.degree = unsigned(n);
            } else {
                int bcol = c.col();
                std::uint64_t base = c.integer(dir == "mod" ? "the modulus" : "the field size");
                if (dir == "mod") {
                    spec.kind = GroupSpec::Kind::matrix_mod_m;
                    if (base < 2 || base > 0xffff)
                        throw ParseError("modulus out of range", lineno, bcol);
                    spec.modulus = unsigned(base);
                } else {
                    spec.kind = GroupSpec::Kind::matrix_gf;
                    if (base < 2 || base > 81 || factorize(base).size() != 1)
                        throw ParseError("field size must be a prime power at most 81", lineno,
                                         bcol);
                    spec.field_q = unsigned(base);
                }
                std::string kw = c.token();
                if (kw != "dim") c.fail("expected 'dim'");
                int dimcol = c.col();
                std::uint64_t d = c.integer("the dimension");
                check_matrix_header(c, base, d, dimcol);
                spec.dim = unsigned(d);
                ring = ring_of(spec);
            }
            have_header = true;
            c.end_of_line();
        } else if (dir == "expect") {
            std::string key = c.token();
            if (key != "order" && key != "center" && key != "classes" && key != "quotient")
                c.fail("expected an invariant key (order, center, classes, quotient)");
            if (!seen.insert(key).second)
                throw ParseError("duplicate expect key '" + key + "'", lineno, dcol);
            std::uint64_t v = c.integer("the expected value");
            if (key == "order") spec.expected.order = v;
            if (key == "center") spec.expected.center_order = v;
            if (key == "classes") spec.expected.class_count = v;
            if (key == "quotient") spec.expected.quotient_order = v;
            c.end_of_line();
        } else if (dir == "gen") {
            if (!have_header)
                throw ParseError("generator before the header line", lineno, dcol);
            if (spec.kind == GroupSpec::Kind::perm_cycles) {
                spec.cycle_gens.push_back(parse_cycles(c, spec.degree));
            } else {
                unsigned bound = unsigned(ring->size());
                auto entries = parse_matrix(c, spec.dim, bound);
                RMat mat = RMat::from_rows(*ring, [&] {
                    std::vector<std::vector<unsigned>> rows(spec.dim);
                    for (unsigned i = 0; i < spec.dim; ++i)
                        rows[i].assign(entries.begin() + std::ptrdiff_t(i) * spec.dim,
                                       entries.begin() + std::ptrdiff_t(i + 1) * spec.dim);
                    return rows;
                }());
                if (!ring->inv(mat.det()))
                    throw ParseError("generator matrix is not invertible", lineno, dcol);
                spec.matrix_gens.push_back(std::move(entries));
                c.end_of_line();
            }
        } else {
            throw ParseError("unknown directive '" + dir + "'", lineno, dcol);
        }
    }
    if (!have_header)
        throw ParseError("the file has no header line (degree, mod, or field)", lineno + 1, 1);
    return spec;
}

std::string serialize_group_spec(const GroupSpec& spec) {
    std::ostringstream out;
    if (!spec.name.empty()) out << "name " << spec.name << "\n";
    switch (spec.kind) {
        case GroupSpec::Kind::perm_cycles: out << "degree " << spec.degree << "\n"; break;
        case GroupSpec::Kind::matrix_mod_m:
            out << "mod " << spec.modulus << " dim " << spec.dim << "\n";
            break;
        case GroupSpec::Kind::matrix_gf:
            out << "field " << spec.field_q << " dim " << spec.dim << "\n";
            break;
    }
    if (spec.expected.order) out << "expect order " << *spec.expected.order << "\n";
    if (spec.expected.center_order) out << "expect center " << *spec.expected.center_order << "\n";
    if (spec.expected.class_count)
        out << "expect classes " << *spec.expected.class_count << "\n";
    if (spec.expected.quotient_order)
        out << "expect quotient " << *spec.expected.quotient_order << "\n";
    for (const auto& cycles : spec.cycle_gens) {
        out << "gen ";
        for (const auto& cyc : cycles) {
            out << "(";
            for (std::size_t i = 0; i < cyc.size(); ++i) out << (i ? " " : "") << cyc[i];
            out << ")";
        }
        out << "\n";
    }
    for (const auto& m : spec.matrix_gens) {
        out << "gen [";
        for (unsigned i = 0; i < spec.dim; ++i) {
            out << (i ? ",[" : "[");
            for (unsigned j = 0; j < spec.dim; ++j)
                out << (j ? "," : "") << m[std::size_t(i) * spec.dim + j];
            out << "]";
        }
        out << "]\n";
    }
    return out.str();
}

GroupPtr realize(const GroupSpec& spec) {
    const std::string shown = spec.name.empty() ? "(unnamed)" : spec.name;
    std::vector<Perm> gens;
    unsigned degree;
    if (spec.kind == GroupSpec::Kind::perm_cycles) {
        degree = spec.degree;
        for (const auto& cycles : spec.cycle_gens) {
            std::vector<std::uint16_t> img(degree);
            for (unsigned i = 0; i < degree; ++i) img[i] = std::uint16_t(i);
            for (const auto& cyc : cycles)
                for (std::size_t i = 0; i < cyc.size(); ++i)
                    img[cyc[i] - 1] = std::uint16_t(cyc[(i + 1) % cyc.size()] - 1);
            gens.push_back(Perm::from_images(std::move(img)));
        }
    } else {
        auto ring = ring_of(spec);
        std::vector<RMat> mats;
        for (const auto& m : spec.matrix_gens) {
            std::vector<std::vector<unsigned>> rows(spec.dim);
            for (unsigned i = 0; i < spec.dim; ++i)
                rows[i].assign(m.begin() + std::ptrdiff_t(i) * spec.dim,
                               m.begin() + std::ptrdiff_t(i + 1) * spec.dim);
            mats.push_back(RMat::from_rows(*ring, rows));
        }
        gens = matrix_vector_action(*ring, mats);
        degree = 1;
        for (unsigned i = 0; i < spec.dim; ++i) degree *= ring->size();
    }
    GroupPtr g = gens.empty() ? Group::trivial(degree, spec.name)
                              : Group::from_generators(std::move(gens), spec.name);
    if (spec.expected.order && g->order() != BigInt(*spec.expected.order))
        throw ValidationError("group " + shown + ": computed order " + g->order().str() +
                              " does not match the declared " +
                              std::to_string(*spec.expected.order));
    return g;
}

namespace {

EsType es_type_token(const std::string& t) {
    if (t == "p") return EsType::exp_p;
    if (t == "p2") return EsType::exp_p2;
    if (t == "plus") return EsType::plus;
    if (t == "minus") return EsType::minus;
    throw ValidationError("unknown extraspecial type token '" + t + "'");
}

GroupPtr build_builtin(const std::string& key) {
    std::istringstream in(key);
    std::string kind;
    in >> kind;
    auto need = [&](auto& v, const char* what) {
        if (!(in >> v)) throw ValidationError("builtin key '" + key + "': missing " + what);
    };
    GroupPtr g;
    if (kind == "extraspecial" || kind == "semidirect") {
        std::uint64_t p;
        unsigned n;
        std::string t;
        need(p, "prime");
        need(n, "n");
        need(t, "type");
        if (kind == "extraspecial") {
            g = extraspecial_group(p, n, es_type_token(t));
        } else {
            const unsigned dim = 2 * n;
            std::vector<std::vector<unsigned>> mat(dim, std::vector<unsigned>(dim));
            for (unsigned i = 0; i < dim; ++i)
                for (unsigned j = 0; j < dim; ++j) need(mat[i][j], "matrix entry");
            g = extraspecial_semidirect(p, n, es_type_token(t), mat);
        }
    } else if (kind == "value") {
        unsigned n, n_i;
        need(n, "n");
        need(n_i, "n_i");
        g = value_scenario_group(n, n_i);
    } else {
        throw ValidationError("unknown builtin key '" + key + "'");
    }
    std::string extra;
    if (in >> extra) throw ValidationError("builtin key '" + key + "': trailing token");
    return g;
}

void load_entry(CorpusEntry& e, const std::string& dir) {
    GroupPtr g;
    if (!e.file.empty()) {
        std::ifstream f(dir + "/" + e.file);
        if (!f) {
            if (e.optional_entry) return;
            throw ValidationError("corpus entry " + e.name + ": cannot read " + e.file);
        }
        std::stringstream ss;
        ss << f.rdbuf();
        GroupSpec spec = parse_group_file(ss.str());
        if (!spec.name.empty() && spec.name != e.name)
            throw ValidationError("corpus entry " + e.name + ": the file names itself " +
                                  spec.name);
        if (spec.name.empty()) spec.name = e.name;
        if (spec.expected.order && e.expected.order &&
            *spec.expected.order != *e.expected.order)
            throw ValidationError("corpus entry " + e.name + ": file declares order " +
                                  std::to_string(*spec.expected.order) +
                                  " but the manifest declares " +
                                  std::to_string(*e.expected.order));
        if (!spec.expected.order) spec.expected.order = e.expected.order;
        g = realize(spec);
    } else if (!e.builtin.empty()) {
        g = build_builtin(e.builtin);
    } else {
        return;  // optional placeholder with no realization
    }

    auto mismatch = [&](const char* what, std::uint64_t got, std::uint64_t want) {
        throw ValidationError("corpus entry " + e.name + ": computed " + what + " " +
                              std::to_string(got) + " does not match the declared " +
                              std::to_string(want));
    };
    if (e.expected.order && g->order() != BigInt(*e.expected.order))
        mismatch("order", g->order_u64(), *e.expected.order);
    std::uint64_t zorder = 0;
    if (e.expected.center_order || e.expected.quotient_order) zorder = center(g)->order_u64();
    if (e.expected.center_order && zorder != *e.expected.center_order)
        mismatch("center order", zorder, *e.expected.center_order);
    if (e.expected.quotient_order && g->order_u64() / zorder != *e.expected.quotient_order)
        mismatch("central quotient order", g->order_u64() / zorder, *e.expected.quotient_order);
    if (e.expected.class_count && g->classes().count() != *e.expected.class_count)
        mismatch("class count", g->classes().count(), *e.expected.class_count);
    for (const auto& rec : e.expected.atlas_names)
        if (atlas_matches(*g, rec).empty())
            throw ValidationError("corpus entry " + e.name + ": no class of order " +
                                  std::to_string(rec.order) + " and size " +
                                  std::to_string(rec.size) + " for name " + rec.label);
    e.group = g;
}

}  // namespace

std::vector<CorpusEntry> parse_manifest(const std::string& text) {
    std::vector<CorpusEntry> out;
    std::set<std::string> names;
    CorpusEntry cur;
    bool in_entry = false;
    std::set<std::string> seen;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string body = stripped(raw);
        LineCursor c{body, lineno};
        if (c.done()) continue;
        int dcol = c.col();
        std::string dir = c.token();

        if (dir == "entry") {
            if (in_entry) throw ParseError("entry inside an unfinished entry", lineno, dcol);
            cur = CorpusEntry{};
            seen.clear();
            cur.name = c.token();
            if (cur.name.empty()) c.fail("expected an entry name");
            if (!names.insert(cur.name).second)
                throw ParseError("duplicate entry name '" + cur.name + "'", lineno, dcol);
            c.end_of_line();
            in_entry = true;
            continue;
        }
        if (dir == "end") {
            if (!in_entry) throw ParseError("end outside an entry", lineno, dcol);
            c.end_of_line();
            if (cur.file.empty() && cur.builtin.empty() && !cur.optional_entry)
                throw ParseError("entry " + cur.name + " has no realization and is not optional",
                                 lineno, dcol);
            if (!cur.file.empty() && !cur.builtin.empty())
                throw ParseError("entry " + cur.name + " has both file and builtin realizations",
                                 lineno, dcol);
            out.push_back(std::move(cur));
            in_entry = false;
            continue;
        }
        if (!in_entry) throw ParseError("directive outside an entry block", lineno, dcol);

        auto once = [&](const std::string& key) {
            if (!seen.insert(key).second)
                throw ParseError("duplicate key '" + key + "' in entry " + cur.name, lineno, dcol);
        };
        if (dir == "file") {
            once(dir);
            cur.file = c.token();
            if (cur.file.empty()) c.fail("expected a file path");
            c.end_of_line();
        } else if (dir == "builtin") {
            once(dir);
            cur.builtin = c.rest();
            if (cur.builtin.empty()) c.fail("expected a builtin key");
        } else if (dir == "optional") {
            once(dir);
            cur.optional_entry = true;
            c.end_of_line();
        } else if (dir == "order" || dir == "center" || dir == "classes" || dir == "quotient") {
            once(dir);
            std::uint64_t v = c.integer("the expected value");
            if (dir == "order") cur.expected.order = v;
            if (dir == "center") cur.expected.center_order = v;
            if (dir == "classes") cur.expected.class_count = v;
            if (dir == "quotient") cur.expected.quotient_order = v;
            c.end_of_line();
        } else if (dir == "multiplier") {
            once(dir);
            cur.expected.multiplier_order = c.integer("the multiplier order");
            if (c.token() != "source") c.fail("expected 'source'");
            cur.expected.multiplier_source = c.rest();
            if (cur.expected.multiplier_source.empty()) c.fail("expected a source");
        } else if (dir == "atlas") {
            AtlasName rec;
            rec.order = c.integer("the element order");
            rec.size = c.integer("the class size");
            rec.label = c.token();
            if (rec.label.empty()) c.fail("expected a class name");
            if (c.token() != "source") c.fail("expected 'source'");
            rec.source = c.rest();
            if (rec.source.empty()) c.fail("expected a source");
            cur.expected.atlas_names.push_back(std::move(rec));
        } else if (dir == "provenance") {
            std::string p = c.rest();
            if (p.empty()) c.fail("expected provenance text");
            cur.provenance.push_back(std::move(p));
        } else {
            throw ParseError("unknown manifest directive '" + dir + "'", lineno, dcol);
        }
    }
    if (in_entry)
        throw ParseError("unterminated entry " + cur.name, lineno + 1, 1);
    return out;
}

std::string default_corpus_dir() {
    if (const char* e = std::getenv("PQR_CORPUS_DIR"); e && *e) return e;
    return PQR_CORPUS_DEFAULT_DIR;
}

std::vector<CorpusEntry> corpus(const std::string& dir_in) {
    const std::string dir = dir_in.empty() ? default_corpus_dir() : dir_in;
    std::ifstream mf(dir + "/corpus.manifest");
    if (!mf) throw ValidationError("cannot read the corpus manifest at " + dir + "/corpus.manifest");
    std::stringstream ss;
    ss << mf.rdbuf();
    auto entries = parse_manifest(ss.str());
    for (auto& e : entries) load_entry(e, dir);
    return entries;
}

const CorpusEntry& find_entry(const std::vector<CorpusEntry>& entries, const std::string& name) {
    for (const auto& e : entries)
        if (e.name == name) return e;
    throw NoneFoundError("no corpus entry named " + name);
}

std::vector<std::uint32_t> atlas_matches(const Group& g, const AtlasName& rec) {
    const ClassData& cd = g.classes();
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < cd.count(); ++i)
        if (cd.element_orders[i] == rec.order && cd.sizes[i] == rec.size) out.push_back(i);
    return out;
}

}  // namespace pqr
