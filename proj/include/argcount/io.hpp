#ifndef ARGCOUNT_IO_HPP_
#define ARGCOUNT_IO_HPP_

#include <charconv>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "counting.hpp"
#include "extensions.hpp"
#include "framework.hpp"
#include "ranking.hpp"

namespace argcount {

/// Positioned parser message. Lines and columns are 1-based.
struct ParseDiagnostic {
    enum class Severity { error, warning };

    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
    Severity severity = Severity::error;

    std::string to_string() const {
        return std::to_string(line) + ":" + std::to_string(column) + ": " +
               (severity == Severity::error ? "error: " : "warning: ") + message;
    }
};

/// Rejected input; holds at least one error diagnostic.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<ParseDiagnostic> diags)
        : std::runtime_error(summary(diags)), diagnostics_(std::move(diags)) {}

    const std::vector<ParseDiagnostic> &diagnostics() const noexcept { return diagnostics_; }

private:
    static std::string summary(const std::vector<ParseDiagnostic> &d) {
        for (const auto &x : d)
            if (x.severity == ParseDiagnostic::Severity::error) return x.to_string();
        return "parse error";
    }

    std::vector<ParseDiagnostic> diagnostics_;
};

struct ParseResult {
    ArgumentationFramework framework;
    std::vector<ParseDiagnostic> warnings;
};

namespace detail {

inline bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

struct NameRef {
    std::string name;
    std::size_t line;
    std::size_t column;
};

/// Collects declared names and attack references, then resolves them into a framework.
class FrameworkBuilder {
public:
    void declare(const NameRef &n) {
        if (!index_.emplace(n.name, names_.size()).second) {
            warn(n, "duplicate declaration of argument '" + n.name + "' ignored");
            return;
        }
        names_.push_back(n.name);
    }

    void attack(NameRef from, NameRef to) { pending_.emplace_back(std::move(from), std::move(to)); }

    void error(std::size_t line, std::size_t col, std::string msg) {
        diags_.push_back({line, col, std::move(msg), ParseDiagnostic::Severity::error});
    }

    void warn(const NameRef &at, std::string msg) {
        diags_.push_back({at.line, at.column, std::move(msg), ParseDiagnostic::Severity::warning});
    }

    ParseResult finish() {
        std::vector<Attack> attacks;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto &[from, to] : pending_) {
            auto f = lookup(from), t = lookup(to);
            if (!f || !t) continue;
            if (!seen.emplace(*f, *t).second) {
                warn(from, "duplicate attack (" + from.name + ", " + to.name + ") ignored");
                continue;
            }
            attacks.push_back({*f, *t});
        }
        std::vector<ParseDiagnostic> errors, warnings;
        for (auto &d : diags_) (d.severity == ParseDiagnostic::Severity::error ? errors : warnings).push_back(d);
        if (!errors.empty()) {
            errors.insert(errors.end(), warnings.begin(), warnings.end());
            throw ParseError(std::move(errors));
        }
        return {ArgumentationFramework(std::move(names_), std::move(attacks)), std::move(warnings)};
    }

private:
    std::optional<std::size_t> lookup(const NameRef &n) {
        auto it = index_.find(n.name);
        if (it != index_.end()) return it->second;
        error(n.line, n.column, "undeclared argument '" + n.name + "'");
        return std::nullopt;
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<NameRef, NameRef>> pending_;
    std::vector<ParseDiagnostic> diags_;
};

class ApxCursor {
public:
    explicit ApxCursor(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (!at_end()) {
            const char c = peek();
            if (c == '%') {
                while (!at_end() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                advance();
            } else {
                break;
            }
        }
    }

    NameRef name() {
        skip_blank();
        NameRef r{"", line_, col_};
        while (!at_end() && is_name_char(peek())) {
            r.name.push_back(peek());
            advance();
        }
        return r;
    }

    bool expect(char c) {
        skip_blank();
        if (at_end() || peek() != c) return false;
        advance();
        return true;
    }

    /// Skips past the next '.', or to the end of input.
    void recover() {
        while (!at_end()) {
            const char c = peek();
            advance();
            if (c == '.') return;
        }
    }

    std::string describe_here() const {
        if (at_end()) return "end of input";
        const auto c = static_cast<unsigned char>(text_[pos_]);
        if (c < 0x20 || c >= 0x7f) return "byte 0x" + hex(c);
        return std::string("'") + text_[pos_] + "'";
    }

private:
    static std::string hex(unsigned char c) {
        const char *digits = "0123456789abcdef";
        return {digits[c >> 4], digits[c & 15]};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

} // namespace detail

/**
 * Parses Aspartix facts: `arg(NAME).` and `att(NAME,NAME).` with NAME made of
 * [A-Za-z0-9_]. Whitespace between tokens is free and `%` comments run to the
 * end of the line. Arguments are indexed in declaration order.
 */
inline ParseResult parse_apx(std::string_view text) {
    detail::FrameworkBuilder b;
    detail::ApxCursor cur(text);
    for (;;) {
        cur.skip_blank();
        if (cur.at_end()) break;
        const auto head = cur.name();
        if (head.name != "arg" && head.name != "att") {
            if (head.name.empty())
                b.error(head.line, head.column, "expected 'arg' or 'att', found " + cur.describe_here());
            else
                b.error(head.line, head.column, "unknown predicate '" + head.name + "'");
            cur.recover();
            continue;
        }
        auto fail = [&](const std::string &what) {
            cur.skip_blank();
            b.error(cur.line(), cur.column(), "expected " + what + ", found " + cur.describe_here());
            cur.recover();
        };
        if (!cur.expect('(')) {
            fail("'('");
            continue;
        }
        const auto first = cur.name();
        if (first.name.empty()) {
            fail("argument name");
            continue;
        }
        std::optional<detail::NameRef> second;
        if (head.name == "att") {
            if (!cur.expect(',')) {
                fail("','");
                continue;
            }
            second = cur.name();
            if (second->name.empty()) {
                fail("argument name");
                continue;
            }
        }
        if (!cur.expect(')')) {
            fail("')'");
            continue;
        }
        if (!cur.expect('.')) {
            fail("'.'");
            continue;
        }
        if (second)
            b.attack(first, *second);
        else
            b.declare(first);
    }
    return b.finish();
}

/**
 * Parses Trivial Graph Format: node lines `ID [label]`, a line holding only
 * `#`, then edge lines `FROM TO [label]`. An edge means FROM attacks TO.
 * Node ids become argument names; labels are ignored.
 */
inline ParseResult parse_tgf(std::string_view text) {
    detail::FrameworkBuilder b;
    bool in_edges = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::vector<detail::NameRef> tokens;
        for (std::size_t i = 0; i < line.size();) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            tokens.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
            i = j;
        }
        if (tokens.empty()) continue;
        if (tokens.size() == 1 && tokens[0].name == "#") {
            if (in_edges)
                b.error(line_no, tokens[0].column, "unexpected second '#' separator");
            in_edges = true;
            continue;
        }
        if (!in_edges) {
            b.declare(tokens[0]);
        } else if (tokens.size() < 2) {
            b.error(line_no, tokens[0].column, "edge line needs FROM and TO node ids");
        } else {
            b.attack(tokens[0], tokens[1]);
        }
    }
    if (!in_edges) b.error(line_no + 1, 1, "missing '#' separator between node and edge sections");
    return b.finish();
}

enum class InputFormat { apx, tgf, detect };

/// Picks a format from the file extension, then from the content.
inline InputFormat detect_format(std::string_view path, std::string_view text) {
    auto ends_with = [&](std::string_view suf) {
        return path.size() >= suf.size() && path.substr(path.size() - suf.size()) == suf;
    };
    if (ends_with(".apx")) return InputFormat::apx;
    if (ends_with(".tgf")) return InputFormat::tgf;
    if (text.find("arg(") != std::string_view::npos || text.find("att(") != std::string_view::npos)
        return InputFormat::apx;
    return InputFormat::tgf;
}

inline ParseResult parse_framework(std::string_view text, InputFormat fmt, std::string_view path_hint = {}) {
    if (fmt == InputFormat::detect) fmt = detect_format(path_hint, text);
    return fmt == InputFormat::apx ? parse_apx(text) : parse_tgf(text);
}

inline std::string write_apx(const ArgumentationFramework &af) {
    std::string out;
    for (const auto &n : af.names()) {
        for (char c : n)
            if (!detail::is_name_char(c)) throw std::invalid_argument("argument name '" + n + "' is not valid APX");
        out += "arg(" + n + ").\n";
    }
    for (const auto &a : af.attacks()) out += "att(" + af.name(a.attacker) + "," + af.name(a.target) + ").\n";
    return out;
}

inline std::string write_tgf(const ArgumentationFramework &af) {
    std::string out;
    for (const auto &n : af.names()) {
        if (n == "#" || n.find_first_of(" \t\r\n") != std::string::npos)
            throw std::invalid_argument("argument name '" + n + "' is not a valid TGF id");
        out += n + "\n";
    }
    out += "#\n";
    for (const auto &a : af.attacks()) out += af.name(a.attacker) + " " + af.name(a.target) + "\n";
    return out;
}

using ExtensionListing = std::vector<std::pair<SemanticsKind, std::vector<ArgSet>>>;

/// Result document with a fixed key order so repeated runs are byte-identical.
inline nlohmann::ordered_json results_json(const ArgumentationFramework &af, const StrengthVector &strengths,
                                           const Ranking &ranking, const ExtensionListing *extensions = nullptr) {
    nlohmann::ordered_json j;
    j["arguments"] = af.names();
    j["alpha"] = strengths.alpha;
    j["epsilon"] = strengths.epsilon;
    j["iterations"] = strengths.iterations;
    auto &s = j["strengths"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < af.size(); ++i) s[af.name(i)] = strengths.values.at(i);
    auto &r = j["ranking"] = nlohmann::ordered_json::array();
    for (const auto &g : ranking.groups()) {
        auto names = nlohmann::ordered_json::array();
        for (auto x : g) names.push_back(af.name(x));
        r.push_back(std::move(names));
    }
    if (extensions) {
        auto &e = j["extensions"] = nlohmann::ordered_json::object();
        for (const auto &[kind, sets] : *extensions) {
            auto list = nlohmann::ordered_json::array();
            for (const auto &set : sets) list.push_back(af.names_of(set));
            e[std::string(to_string(kind))] = std::move(list);
        }
    }
    return j;
}

inline std::string emit_results(const ArgumentationFramework &af, const StrengthVector &strengths,
                                const Ranking &ranking, const ExtensionListing *extensions = nullptr) {
    return results_json(af, strengths, ranking, extensions).dump(2) + "\n";
}

inline std::string emit_csv(const ArgumentationFramework &af, const StrengthVector &strengths) {
    std::string out = "argument,strength\n";
    for (std::size_t i = 0; i < af.size(); ++i) out += af.name(i) + "," + shortest_repr(strengths.values.at(i)) + "\n";
    return out;
}

} // namespace argcount

#endif // ARGCOUNT_IO_HPP_
