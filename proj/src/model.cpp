#include "gps/model.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace gps {

const GradedSubmodule& Model::submodule(const std::string& name) const
{
    for (const auto& [n, s] : submodules)
        if (n == name)
            return s;
    throw InputError("unknown submodule '" + name + "'");
}

bool Model::has_submodule(const std::string& name) const
{
    for (const auto& [n, s] : submodules)
        if (n == name)
            return true;
    return false;
}

bool operator==(const Model& a, const Model& b)
{
    return a.group == b.group && a.ring == b.ring && a.module == b.module && a.submodules == b.submodules &&
           a.subsets == b.subsets;
}

namespace {

std::string describe(std::size_t line, std::size_t column, const std::string& message, const std::string& token)
{
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << message;
    if (!token.empty())
        os << " (at '" << token << "')";
    return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::string token)
    : InputError(describe(line, column, message, token)),
      line_(line),
      column_(column),
      message_(std::move(message)),
      token_(std::move(token))
{
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { Word, Number, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;
};

std::vector<Token> lex_line(std::string_view line, std::size_t lineno)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_' ||
                                       line[i] == '\''))
                ++i;
            out.push_back({Tok::Word, std::string(line.substr(start, i - start)), start + 1});
        } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                   (c == '-' && i + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
            ++i;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
                ++i;
            out.push_back({Tok::Number, std::string(line.substr(start, i - start)), start + 1});
        } else if (std::string_view("=(),{}@").find(c) != std::string_view::npos) {
            ++i;
            out.push_back({Tok::Punct, std::string(1, c), start + 1});
        } else {
            throw ParseError(lineno, start + 1, "unexpected character", std::string(1, c));
        }
    }
    out.push_back({Tok::End, "", line.size() + 1});
    return out;
}

// ---------------------------------------------------------------- parser

class LineParser {
public:
    LineParser(std::vector<Token> toks, std::size_t lineno) : toks_(std::move(toks)), line_(lineno) {}

    const Token& peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().kind == Tok::End; }
    Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const
    {
        throw ParseError(line_, t.column, msg, t.text);
    }

    void expect_punct(char c)
    {
        const Token t = next();
        if (t.kind != Tok::Punct || t.text[0] != c)
            fail(t, std::string("expected '") + c + "'");
    }

    bool accept_punct(char c)
    {
        if (peek().kind == Tok::Punct && peek().text[0] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_word(const char* w)
    {
        if (peek().kind == Tok::Word && peek().text == w) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_end()
    {
        if (!at_end())
            fail(peek(), "unexpected trailing input");
    }

    Int number(const Token& t) const
    {
        // digits are unbounded in the grammar; values are bounded here
        const bool neg = t.text[0] == '-';
        const std::string digits = t.text.substr(neg ? 1 : 0);
        const std::size_t first = digits.find_first_not_of('0');
        const std::string sig = first == std::string::npos ? "0" : digits.substr(first);
        constexpr Int limit = Int{1} << 31;
        if (sig.size() > 10 || std::stoll(sig) >= limit)
            fail(t, "integer out of range (magnitude must be below 2^31)");
        const Int v = std::stoll(sig);
        return neg ? -v : v;
    }

    Int expect_number()
    {
        const Token t = next();
        if (t.kind != Tok::Number)
            fail(t, "expected an integer");
        return number(t);
    }

    // Z<n> or bare Z (n = 0)
    std::pair<Int, Token> expect_cyclic(bool allow_free)
    {
        const Token t = next();
        if (t.kind != Tok::Word || t.text.empty() || t.text[0] != 'Z')
            fail(t, "expected Z or Z<n>");
        const std::string rest = t.text.substr(1);
        if (rest.empty()) {
            if (!allow_free)
                fail(t, "expected Z<n> with an explicit order");
            return {0, t};
        }
        for (char c : rest)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail(t, "expected Z or Z<n>");
        Token num{Tok::Number, rest, t.column + 1};
        return {number(num), t};
    }

    std::vector<Int> tuple()
    {
        std::vector<Int> v;
        expect_punct('(');
        if (!accept_punct(')')) {
            do {
                v.push_back(expect_number());
            } while (accept_punct(','));
            expect_punct(')');
        }
        return v;
    }

    std::size_t line() const { return line_; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

bool is_name(const std::string& s)
{
    return !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_');
}

}  // namespace

Model parse_model(std::string_view text)
{
    std::optional<GradingGroup> group;
    std::optional<BaseRing> ring;
    std::optional<GradedModule> module;
    Model out;
    std::set<std::string> names;

    std::size_t lineno = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(begin, end - begin);
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        ++lineno;
        begin = end + 1;

        LineParser p(lex_line(raw, lineno), lineno);
        if (p.at_end())
            continue;
        const Token head = p.next();
        if (head.kind != Tok::Word)
            p.fail(head, "expected a statement keyword");

        if (head.text == "group") {
            if (group)
                p.fail(head, "group declared twice");
            p.expect_punct('=');
            std::vector<Int> orders;
            do {
                auto [k, tok] = p.expect_cyclic(false);
                if (k < 1)
                    p.fail(tok, "cyclic order must be at least 1");
                orders.push_back(k);
            } while (p.accept_word("x"));
            p.expect_end();
            group = GradingGroup(orders);
        } else if (head.text == "ring") {
            if (!group)
                p.fail(head, "group must precede ring");
            if (ring)
                p.fail(head, "ring declared twice");
            p.expect_punct('=');
            auto [n, tok] = p.expect_cyclic(true);
            if (n == 1)
                p.fail(tok, "ring modulus must be 0 (for Z) or at least 2");
            p.expect_end();
            ring = n == 0 ? BaseRing::integers() : BaseRing::modular(n);
        } else if (head.text == "module") {
            if (!ring)
                p.fail(head, "ring must precede module");
            if (module)
                p.fail(head, "module declared twice");
            p.expect_punct('=');
            std::vector<Factor> factors;
            if (p.peek().kind == Tok::Number && p.peek().text == "0") {
                p.next();
            } else {
                do {
                    auto [n, tok] = p.expect_cyclic(true);
                    if (n == 1)
                        p.fail(tok, "factor order must be 0 (for Z) or at least 2");
                    if (ring->is_finite() && (n == 0 || ring->modulus() % n != 0)) {
                        std::ostringstream os;
                        if (n == 0)
                            os << "free factor Z is not a module over Z" << ring->modulus();
                        else
                            os << "factor order " << n << " does not divide ring modulus " << ring->modulus();
                        p.fail(tok, os.str());
                    }
                    p.expect_punct('@');
                    Degree d;
                    const Token at = p.peek();
                    if (at.kind == Tok::Number) {
                        if (group->cyclic_orders().size() != 1)
                            p.fail(at, "degree must be a tuple for a non-cyclic grading group");
                        d = {p.expect_number()};
                    } else {
                        d = p.tuple();
                    }
                    if (!group->contains(d))
                        p.fail(at, "degree is not an element of the grading group");
                    factors.push_back({n, d});
                } while (p.accept_word("x"));
            }
            p.expect_end();
            module = GradedModule(*ring, *group, factors);
        } else if (head.text == "submodule" || head.text == "subset") {
            if (!module)
                p.fail(head, "module must precede " + head.text + " declarations");
            const Token name = p.next();
            if (name.kind != Tok::Word || !is_name(name.text))
                p.fail(name, "expected a name");
            if (name.text == "x")
                p.fail(name, "'x' is reserved");
            if (!names.insert(name.text).second)
                p.fail(name, "name already declared");
            p.expect_punct('=');
            if (head.text == "submodule") {
                std::vector<ModuleElement> gens;
                if (p.peek().kind == Tok::Number && p.peek().text == "0") {
                    p.next();
                } else {
                    do {
                        const Token at = p.peek();
                        std::vector<Int> v = p.tuple();
                        if (v.size() != module->rank()) {
                            std::ostringstream os;
                            os << "vector has " << v.size() << " entries but the module has " << module->rank()
                               << " factors";
                            p.fail(at, os.str());
                        }
                        gens.emplace_back(*module, v);
                    } while (p.accept_punct(','));
                }
                p.expect_end();
                out.submodules.emplace_back(name.text, GradedSubmodule::from_generators(*module, gens));
            } else {
                p.expect_punct('{');
                std::vector<std::string> members;
                if (!p.accept_punct('}')) {
                    do {
                        const Token m = p.next();
                        if (m.kind != Tok::Word)
                            p.fail(m, "expected a submodule name");
                        if (!out.has_submodule(m.text))
                            p.fail(m, "unknown submodule name");
                        members.push_back(m.text);
                    } while (p.accept_punct(','));
                    p.expect_punct('}');
                }
                p.expect_end();
                out.subsets.emplace_back(name.text, members);
            }
        } else {
            p.fail(head, "unknown statement");
        }
    }
    if (!group || !ring || !module)
        throw ParseError(lineno, 1, !group ? "missing group declaration"
                                    : !ring ? "missing ring declaration"
                                            : "missing module declaration",
                         "");
    out.group = *group;
    out.ring = *ring;
    out.module = *module;
    return out;
}

Model load_model(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

// ---------------------------------------------------------------- rendering

std::string format_degree(const GradingGroup& g, const Degree& d)
{
    if (g.cyclic_orders().size() == 1)
        return std::to_string(d.at(0));
    return format_vector(d);
}

std::string format_vector(const std::vector<Int>& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string generator_list(const GradedSubmodule& n)
{
    const auto gens = n.generators();
    if (gens.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        out += (i ? ", " : "") + format_vector(gens[i].coordinates());
    return out;
}

std::string pretty_submodule(const GradedSubmodule& n)
{
    const GradedModule& m = n.module();
    if (m.rank() == 0)
        return "0";
    std::vector<ModuleElement> parts;
    std::vector<Int> cond;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        cond.push_back(factor_conductor(n, i));
        std::vector<Int> v(m.rank(), 0);
        v[i] = cond.back();
        parts.emplace_back(m, v);
    }
    if (!(GradedSubmodule::from_generators(m, parts) == n))
        return "<" + generator_list(n) + ">";
    std::string out;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        const Int order = m.factors()[i].order;
        const Int c = cond[i];
        std::string piece;
        if (c == 0 || (order != 0 && c % order == 0))
            piece = "0";
        else {
            piece = (c == 1 ? "" : std::to_string(c)) + "Z";
            if (order != 0)
                piece += std::to_string(order);
        }
        out += (i ? " x " : "") + piece;
    }
    return out;
}

std::string render_model(const Model& m)
{
    std::ostringstream os;
    os << "group = ";
    const auto& orders = m.group.cyclic_orders();
    for (std::size_t i = 0; i < orders.size(); ++i)
        os << (i ? " x " : "") << 'Z' << orders[i];
    os << "\nring = Z";
    if (m.ring.is_finite())
        os << m.ring.modulus();
    os << "\nmodule = ";
    if (m.module.rank() == 0)
        os << '0';
    for (std::size_t i = 0; i < m.module.rank(); ++i) {
        const Factor& f = m.module.factors()[i];
        os << (i ? " x " : "") << 'Z';
        if (f.order != 0)
            os << f.order;
        os << '@' << format_degree(m.group, f.degree);
    }
    os << '\n';
    for (const auto& [name, n] : m.submodules)
        os << "submodule " << name << " = " << generator_list(n) << '\n';
    for (const auto& [name, members] : m.subsets) {
        os << "subset " << name << " = {";
        for (std::size_t i = 0; i < members.size(); ++i)
            os << (i ? ", " : "") << members[i];
        os << "}\n";
    }
    return os.str();
}

}  // namespace gps
