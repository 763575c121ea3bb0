#include "massey/parse.hpp"

#include "massey/errors.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace massey {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Character cursor over one line; columns are 1-based in the original line.
class Cursor {
public:
    Cursor(std::string_view text, int line, int column_offset = 0)
        : s_(text), line_(line), offset_(column_offset) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
    }
    std::string ident() {
        if (!ident_start(peek())) fail("expected a name" + found());
        std::size_t start = pos_;
        while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer" + found());
        }
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    // Unsigned "p" or "p/q".
    Scalar rational() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        try {
            return Scalar::parse(s_.substr(start, pos_ - start));
        } catch (const std::exception&) {
            pos_ = start;
            fail("malformed number");
        }
    }
    std::string_view rest() {
        skip_ws();
        return s_.substr(pos_);
    }
    int column() const { return offset_ + static_cast<int>(pos_) + 1; }
    int line() const { return line_; }
    std::size_t pos() const { return pos_; }
    void set_pos(std::size_t p) { pos_ = p; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

private:
    std::string found() {
        if (pos_ >= s_.size()) return ", found end of line";
        return std::string(", found '") + s_[pos_] + "'";
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
    int offset_;
};

Polynomial polynomial_from(Cursor& c) {
    Polynomial p;
    bool first = true;
    while (true) {
        Scalar sign(1);
        if (c.accept('-'))
            sign = Scalar(-1);
        else if (!c.accept('+') && !first)
            c.fail("expected '+' or '-'");
        first = false;
        PolynomialTerm term{sign, {}};
        do {
            char ch = c.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                term.coefficient *= c.rational();
            } else if (ident_start(ch)) {
                std::string name = c.ident();
                int e = 1;
                if (c.accept('^')) {
                    const int col = c.column();
                    e = static_cast<int>(c.integer());
                    if (e < 0) throw ParseError("negative exponent", c.line(), col);
                }
                term.factors.emplace_back(std::move(name), e);
            } else {
                c.fail(ch ? std::string("unexpected '") + ch + "'" : "expected a term, found end of line");
            }
        } while (c.accept('*'));
        p.terms.push_back(std::move(term));
        if (c.done()) break;
        char ch = c.peek();
        if (ch != '+' && ch != '-') c.fail(std::string("unexpected '") + ch + "'");
    }
    return p;
}

LinearCombination combination_from(Cursor& c) {
    const int col = c.column();
    Polynomial p = polynomial_from(c);
    LinearCombination out;
    for (const auto& t : p.terms) {
        if (t.factors.empty()) {
            if (t.coefficient.is_zero()) continue;
            throw ParseError("expected a combination of basis elements", c.line(), col);
        }
        if (t.factors.size() != 1 || t.factors[0].second != 1)
            throw ParseError("expected a combination of basis elements, got a product", c.line(), col);
        out.emplace_back(t.coefficient, t.factors[0].first);
    }
    return out;
}

struct Line {
    std::string text;  // comment stripped
    int number = 0;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t start = 0;
    int n = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        out.push_back({std::move(line), ++n});
        start = end + 1;
    }
    return out;
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

class LineReader {
public:
    explicit LineReader(std::vector<Line> lines) : lines_(std::move(lines)) {}
    // Next non-blank line, or nullptr.
    const Line* next() {
        while (i_ < lines_.size()) {
            const Line& l = lines_[i_++];
            if (!blank(l.text)) return &l;
        }
        return nullptr;
    }
    int last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

private:
    std::vector<Line> lines_;
    std::size_t i_ = 0;
};

struct MulDecl {
    std::string a, b;
    LinearCombination value;
    int line;
};
struct DiffDecl {
    std::string a;
    LinearCombination value;
    int line;
};

struct AlgebraSpec {
    std::optional<int> cap;
    bool truncated = false;
    std::vector<GeneratorDecl> gens;
    std::map<std::string, Polynomial> diffs;
    std::vector<std::pair<std::string, int>> basis;
    std::vector<MulDecl> muls;
    std::vector<DiffDecl> table_diffs;
    int first_line = 0;
    int free_line = 0, table_line = 0;
};

bool is_end(const Line& l) {
    Cursor c(l.text, l.number);
    return ident_start(c.peek()) && c.ident() == "end" && c.done();
}

template <class F>
void read_block(LineReader& r, const Line& opener, const char* what, F&& each) {
    while (const Line* l = r.next()) {
        if (is_end(*l)) return;
        each(*l);
    }
    throw ParseError(std::string("unterminated '") + what + "' block", opener.number, 1);
}

// Handles algebra keys; returns false for keys it does not know.
bool algebra_line(AlgebraSpec& spec, const std::string& key, Cursor& c, const Line& line, LineReader& r) {
    if (!spec.first_line) spec.first_line = line.number;
    if (key == "cap") {
        c.expect('=');
        const int col = c.column();
        long cap = c.integer();
        if (cap < 0) throw ParseError("cap must be non-negative", line.number, col);
        if (spec.cap) throw ParseError("cap given twice", line.number, 1);
        spec.cap = static_cast<int>(cap);
    } else if (key == "truncated") {
        spec.truncated = true;
    } else if (key == "gen") {
        std::string name = c.ident();
        c.expect(':');
        const long deg = c.integer();
        spec.gens.push_back({name, static_cast<int>(deg)});
        if (!spec.free_line) spec.free_line = line.number;
    } else if (key == "d") {
        std::string name = c.ident();
        c.expect('=');
        if (spec.diffs.contains(name)) throw ParseError("differential of '" + name + "' given twice", line.number, 1);
        spec.diffs[name] = polynomial_from(c);
        if (!spec.free_line) spec.free_line = line.number;
    } else if (key == "basis") {
        if (!spec.table_line) spec.table_line = line.number;
        read_block(r, line, "basis", [&](const Line& l) {
            Cursor bc(l.text, l.number);
            std::string name = bc.ident();
            bc.expect(':');
            const long deg = bc.integer();
            if (!bc.done()) bc.fail("unexpected text after degree");
            spec.basis.emplace_back(name, static_cast<int>(deg));
        });
    } else if (key == "mul") {
        if (!spec.table_line) spec.table_line = line.number;
        read_block(r, line, "mul", [&](const Line& l) {
            Cursor mc(l.text, l.number);
            std::string a = mc.ident();
            mc.expect('*');
            std::string b = mc.ident();
            mc.expect('=');
            spec.muls.push_back({a, b, combination_from(mc), l.number});
        });
    } else if (key == "diff") {
        if (!spec.table_line) spec.table_line = line.number;
        read_block(r, line, "diff", [&](const Line& l) {
            Cursor dc(l.text, l.number);
            if (dc.ident() != "d") dc.fail("expected 'd <name> = ...'");
            std::string a = dc.ident();
            dc.expect('=');
            spec.table_diffs.push_back({a, combination_from(dc), l.number});
        });
    } else {
        return false;
    }
    if (!c.done()) c.fail("unexpected text");
    return true;
}

AlgebraPtr build_algebra(const AlgebraSpec& spec, int end_line) {
    if (!spec.cap) throw ParseError("missing 'cap = N'", spec.first_line ? spec.first_line : end_line, 1);
    if (spec.free_line && spec.table_line)
        throw ParseError("cannot mix 'gen'/'d' lines with table stanzas", std::max(spec.free_line, spec.table_line), 1);
    if (spec.table_line) {
        TablePresentation t(*spec.cap, spec.truncated);
        for (const auto& [name, deg] : spec.basis) t.add_basis(name, deg);
        for (const auto& m : spec.muls) t.set_product(m.a, m.b, m.value);
        for (const auto& d : spec.table_diffs) t.set_differential(d.a, d.value);
        t.fill_implied_products();
        return t.build();
    }
    if (spec.truncated) throw ParseError("'truncated' applies to table algebras only", spec.first_line, 1);
    return build_free_cdga(spec.gens, spec.diffs, *spec.cap);
}

MatrixDecl matrix_from(Cursor& c) {
    MatrixDecl m;
    m.line = c.line();
    std::string_view rest = c.rest();
    if (rest.empty()) return m;
    std::size_t base = c.pos();
    std::size_t start = 0;
    while (true) {
        std::size_t end = rest.find(';', start);
        std::string_view row = rest.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        std::vector<Scalar> values;
        std::size_t i = 0;
        while (i < row.size()) {
            if (std::isspace(static_cast<unsigned char>(row[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < row.size() && !std::isspace(static_cast<unsigned char>(row[j]))) ++j;
            try {
                values.push_back(Scalar::parse(row.substr(i, j - i)));
            } catch (const std::exception&) {
                c.set_pos(base + start + i);
                c.fail("malformed matrix entry '" + std::string(row.substr(i, j - i)) + "'");
            }
            i = j;
        }
        if (!m.rows.empty() && values.size() != m.rows.front().size()) {
            c.set_pos(base + start);
            c.fail("matrix rows have different lengths");
        }
        m.rows.push_back(std::move(values));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    c.set_pos(base + rest.size());
    return m;
}

void datum_block(DatumDecl& datum, LineReader& r, const Line& opener) {
    datum.kind = DatumKind::Explicit;
    read_block(r, opener, "datum", [&](const Line& l) {
        Cursor c(l.text, l.number);
        std::string which = c.ident();
        if (which != "restrict" && which != "push") {
            c.set_pos(0);
            c.fail("unknown key '" + which + "' in datum block");
        }
        c.expect('[');
        const int col = c.column();
        long n = c.integer();
        if (n < 0) throw ParseError("negative degree", l.number, col);
        c.expect(']');
        c.expect('=');
        auto& target = which == "restrict" ? datum.restrict : datum.push;
        if (target.contains(static_cast<int>(n)))
            throw ParseError(which + "[" + std::to_string(n) + "] given twice", l.number, 1);
        target[static_cast<int>(n)] = matrix_from(c);
    });
}

Matrix to_matrix(const MatrixDecl* decl, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!decl || decl->rows.empty()) {
        if (!decl && rows && cols) return Matrix(0, 0);  // reported as missing by validation
        return Matrix(rows, cols);
    }
    if (decl->rows.size() != rows || decl->rows.front().size() != cols)
        throw ValidationError(what + " has shape " + std::to_string(decl->rows.size()) + "x" +
                              std::to_string(decl->rows.front().size()) + ", expected " + std::to_string(rows) + "x" +
                              std::to_string(cols) + " (line " + std::to_string(decl->line) + ")");
    return Matrix::from_rows(cols, decl->rows);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path.string() + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int line, int column_offset) {
    Cursor c(text, line, column_offset);
    if (c.done()) c.fail("empty expression");
    return polynomial_from(c);
}

Element parse_element(const AlgebraPtr& algebra, std::string_view text) {
    return evaluate(algebra, parse_polynomial(text));
}

CohomologyClass parse_class(const RingPtr& ring, std::string_view text, std::optional<int> zero_degree) {
    Element e = parse_element(ring->algebra(), text);
    if (e.is_zero() && zero_degree) return ring->zero(*zero_degree);
    return ring->project(e);
}

BundleDecl parse_bundle(std::string_view text, int line, int column_offset) {
    BundleDecl b;
    b.line = line;
    Cursor c(text, line, column_offset);
    if (ident_start(c.peek())) {
        std::size_t save = c.pos();
        if (c.ident() == "c1" && c.peek() == '=') {
            c.expect('=');
            std::string_view rest = c.rest();
            std::size_t at = std::string_view::npos;
            for (std::size_t i = rest.find("weight"); i != std::string_view::npos; i = rest.find("weight", i + 1)) {
                bool left = i == 0 || !ident_char(rest[i - 1]);
                bool right = i + 6 >= rest.size() || !ident_char(rest[i + 6]);
                if (left && right) {
                    at = i;
                    break;
                }
            }
            const std::size_t expr_pos = c.pos();
            if (at == std::string_view::npos) c.fail("expected 'weight = <integer>'");
            b.c1 = parse_polynomial(rest.substr(0, at), line, column_offset + static_cast<int>(expr_pos));
            c.set_pos(expr_pos + at + 6);
            c.expect('=');
            b.weight = c.integer();
            if (!c.done()) c.fail("unexpected text");
            return b;
        }
        c.set_pos(save);
    }
    // Short form <expr>:<int>.
    auto colon = text.rfind(':');
    if (colon == std::string_view::npos) c.fail("expected 'c1 = <expr> weight = <integer>' or '<expr>:<integer>'");
    b.c1 = parse_polynomial(text.substr(0, colon), line, column_offset);
    Cursor w(text.substr(colon + 1), line, column_offset + static_cast<int>(colon + 1));
    b.weight = w.integer();
    if (!w.done()) w.fail("unexpected text");
    return b;
}

InputDocument parse_document(std::string_view text, std::string source) {
    InputDocument doc;
    doc.source = std::move(source);
    LineReader r(split_lines(text));
    AlgebraSpec main;
    std::optional<AlgebraSpec> ambient;
    int ambient_end = 0;
    while (const Line* l = r.next()) {
        Cursor c(l->text, l->number);
        if (!ident_start(c.peek())) c.fail("expected a key");
        const std::size_t key_pos = c.pos();
        std::string key = c.ident();
        if (algebra_line(main, key, c, *l, r)) continue;
        if (key == "bundle") {
            std::string_view rest = c.rest();
            doc.bundles.push_back(parse_bundle(rest, l->number, c.column() - 1));
        } else if (key == "euler") {
            c.expect('=');
            if (doc.euler) c.fail("euler given twice");
            doc.euler = polynomial_from(c);
        } else if (key == "ambient") {
            if (ambient) c.fail("ambient given twice");
            if (!c.done()) c.fail("unexpected text");
            ambient.emplace();
            read_block(r, *l, "ambient", [&](const Line& al) {
                Cursor ac(al.text, al.number);
                if (!ident_start(ac.peek())) ac.fail("expected a key");
                const std::size_t p = ac.pos();
                std::string akey = ac.ident();
                if (!algebra_line(*ambient, akey, ac, al, r)) {
                    ac.set_pos(p);
                    ac.fail("unknown key '" + akey + "' in ambient block");
                }
                ambient_end = al.number;
            });
        } else if (key == "datum") {
            if (doc.datum.kind != DatumKind::None) c.fail("datum given twice");
            if (c.done()) {
                datum_block(doc.datum, r, *l);
            } else {
                std::string kind = c.ident();
                if (kind != "tautological") c.fail("unknown datum kind '" + kind + "'");
                if (!c.done()) c.fail("unexpected text");
                doc.datum.kind = DatumKind::Tautological;
            }
        } else {
            c.set_pos(key_pos);
            c.fail("unknown key '" + key + "'");
        }
    }
    doc.algebra = build_algebra(main, r.last_line());
    if (ambient) doc.ambient = build_algebra(*ambient, ambient_end);
    if (doc.datum.kind == DatumKind::Explicit && !doc.ambient)
        throw ParseError("explicit datum needs an 'ambient' block", r.last_line(), 1);
    return doc;
}

InputDocument load_document(const std::filesystem::path& path) { return parse_document(read_file(path), path.string()); }

std::vector<WeightedLineBundleDatum> bundles_of(const std::vector<BundleDecl>& decls, const RingPtr& ring) {
    std::vector<WeightedLineBundleDatum> out;
    for (const auto& d : decls) {
        Element c1 = evaluate(ring->algebra(), d.c1);
        out.emplace_back(c1.is_zero() ? ring->zero(2) : ring->project(c1), d.weight);
    }
    return out;
}

EulerClass euler_of(const InputDocument& doc, const ExtendedModel& model, const std::vector<BundleDecl>& extra) {
    std::vector<BundleDecl> decls = doc.bundles;
    decls.insert(decls.end(), extra.begin(), extra.end());
    if (doc.euler && decls.empty()) return EulerClass::synthetic(model.ring()->project(evaluate(model.algebra(), *doc.euler)));
    if (decls.empty()) throw ValidationError("no line bundles or Euler class given");
    return euler_class(model, bundles_of(decls, model.base_ring()));
}

HamiltonianTransferDatum datum_of(const InputDocument& doc, const ExtendedModel& model, const EulerClass& chi) {
    switch (doc.datum.kind) {
        case DatumKind::None: throw ValidationError("document has no transfer datum");
        case DatumKind::Tautological: return tautological_datum(model.ring(), chi);
        case DatumKind::Explicit: break;
    }
    RingPtr ambient = compute_cohomology(doc.ambient);
    const RingPtr& fixed = model.ring();
    const int T = std::min(ambient->top_degree(), fixed->top_degree());
    const int m = chi.m;
    HamiltonianTransferDatum d{ambient, fixed, {}, {}, chi};
    auto find = [](const std::map<int, MatrixDecl>& mp, int n) -> const MatrixDecl* {
        auto it = mp.find(n);
        return it == mp.end() ? nullptr : &it->second;
    };
    for (int n = 0; n <= T; ++n)
        d.restrict.push_back(to_matrix(find(doc.datum.restrict, n), fixed->betti(n), ambient->betti(n),
                                       "restrict[" + std::to_string(n) + "]"));
    for (int n = 0; n + 2 * m <= T; ++n)
        d.push.push_back(to_matrix(find(doc.datum.push, n), ambient->betti(n + 2 * m), fixed->betti(n),
                                   "push[" + std::to_string(n) + "]"));
    return d;
}

// ---------------------------------------------------------------------------

std::vector<FamilyConfig> parse_family(std::string_view text, const std::filesystem::path& base_dir) {
    LineReader r(split_lines(text));
    std::vector<FamilyConfig> out;
    std::map<std::string, std::shared_ptr<InputDocument>> cache;
    while (const Line* l = r.next()) {
        Cursor c(l->text, l->number);
        if (!ident_start(c.peek()) || c.ident() != "config") {
            c.set_pos(0);
            c.fail("expected 'config <name>'");
        }
        const std::string name(c.rest());
        if (name.empty()) c.fail("expected a configuration name");
        if (name.find_first_of(" \t") != std::string::npos) c.fail("configuration names cannot contain spaces");

        std::optional<std::string> model_path;
        std::optional<std::array<std::pair<std::string, int>, 3>> triple;
        std::vector<BundleDecl> bundles;
        std::string datum = "tautological";
        std::optional<long> corrupt_degree;
        std::optional<int> cap;
        const Line* opener = l;
        read_block(r, *l, "config", [&](const Line& cl) {
            Cursor cc(cl.text, cl.number);
            const std::size_t kp = cc.pos();
            std::string key = cc.ident();
            if (key == "bundle") {
                std::string_view rest = cc.rest();
                bundles.push_back(parse_bundle(rest, cl.number, cc.column() - 1));
                return;
            }
            cc.expect('=');
            if (key == "model") {
                model_path = std::string(cc.rest());
                if (model_path->empty()) cc.fail("expected a path");
                return;
            }
            if (key == "triple") {
                std::string_view rest = cc.rest();
                const int base = cc.column() - 1;
                std::array<std::pair<std::string, int>, 3> parts;
                std::size_t start = 0;
                for (int i = 0; i < 3; ++i) {
                    std::size_t comma = rest.find(',', start);
                    if ((i < 2) != (comma != std::string_view::npos)) cc.fail("triple needs three comma-separated classes");
                    std::string_view part = rest.substr(start, i < 2 ? comma - start : std::string_view::npos);
                    parse_polynomial(part, cl.number, base + static_cast<int>(start));
                    parts[i] = {std::string(part), base + static_cast<int>(start)};
                    start = comma + 1;
                }
                triple = parts;
                return;
            }
            if (key == "datum") {
                datum = cc.ident();
                if (datum == "corrupt-push" || datum == "corrupt") {
                    if (cc.accept('-')) {
                        if (cc.ident() != "push") cc.fail("expected 'corrupt-push'");
                    }
                    datum = "corrupt-push";
                    corrupt_degree = cc.integer();
                } else if (datum != "tautological" && datum != "file") {
                    cc.fail("unknown datum kind '" + datum + "'");
                }
                if (!cc.done()) cc.fail("unexpected text");
                return;
            }
            if (key == "cap") {
                cap = static_cast<int>(cc.integer());
                if (!cc.done()) cc.fail("unexpected text");
                return;
            }
            cc.set_pos(kp);
            cc.fail("unknown key '" + key + "' in config block");
        });
        if (!model_path) throw ParseError("config '" + name + "' has no model", opener->number, 1);
        if (!triple) throw ParseError("config '" + name + "' has no triple", opener->number, 1);

        std::filesystem::path path = base_dir / *model_path;
        auto& doc = cache[path.string()];
        if (!doc) doc = std::make_shared<InputDocument>(load_document(path));
        bundles.insert(bundles.begin(), doc->bundles.begin(), doc->bundles.end());
        if (bundles.empty()) throw ParseError("config '" + name + "' has no bundles", opener->number, 1);

        FamilyConfig cfg{name,
                         doc->algebra,
                         parse_element(doc->algebra, (*triple)[0].first),
                         parse_element(doc->algebra, (*triple)[1].first),
                         parse_element(doc->algebra, (*triple)[2].first),
                         {},
                         nullptr,
                         cap};
        for (const auto& b : bundles) cfg.bundles.emplace_back(evaluate(doc->algebra, b.c1), b.weight);
        if (datum == "tautological") {
            cfg.datum = [](const ExtendedModel& m, const EulerClass& chi) { return tautological_datum(m.ring(), chi); };
        } else if (datum == "corrupt-push") {
            const int k = static_cast<int>(*corrupt_degree);
            cfg.datum = [k](const ExtendedModel& m, const EulerClass& chi) {
                auto d = tautological_datum(m.ring(), chi);
                if (k >= 0 && k < static_cast<int>(d.push.size())) d.push[k] = Matrix(d.push[k].rows(), d.push[k].cols());
                return d;
            };
        } else {
            if (doc->datum.kind == DatumKind::None)
                throw ParseError("config '" + name + "' uses 'datum = file' but the model has no datum", opener->number, 1);
            std::shared_ptr<const InputDocument> captured = doc;
            cfg.datum = [captured](const ExtendedModel& m, const EulerClass& chi) { return datum_of(*captured, m, chi); };
        }
        out.push_back(std::move(cfg));
    }
    return out;
}

std::vector<FamilyConfig> load_family(const std::filesystem::path& path) {
    return parse_family(read_file(path), path.parent_path());
}

}  // namespace massey
