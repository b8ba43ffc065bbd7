#include "vstab/presentation.hpp"

#include "vstab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace vstab {

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (int& x : r) x = -x;
    return r;
}

Word concat(const Word& u, const Word& v) {
    Word r = u;
    r.insert(r.end(), v.begin(), v.end());
    return free_reduce(std::move(r));
}

Word power_word(const Word& w, int e) {
    Word base = e < 0 ? inverse_word(w) : w;
    Word r;
    for (int i = 0; i < std::abs(e); ++i) r.insert(r.end(), base.begin(), base.end());
    return free_reduce(std::move(r));
}

Word commutator_word(const Word& u, const Word& v) {
    return concat(concat(inverse_word(u), inverse_word(v)), concat(u, v));
}

Presentation::Presentation(std::vector<std::string> generator_names) : names_(std::move(generator_names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw ParseError("duplicate generator name " + names_[i]);
}

int Presentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

Word Presentation::gen(std::string_view name) const {
    int i = generator_index(name);
    if (i < 0) throw ParseError("unknown generator '" + std::string(name) + "'");
    return {i + 1};
}

void Presentation::add_relator(Word w) {
    for (int x : w)
        if (x == 0 || static_cast<std::size_t>(std::abs(x)) > names_.size())
            throw ParseError("relator references an undeclared generator");
    w = free_reduce(std::move(w));
    if (!w.empty()) relators_.push_back(std::move(w));
}

namespace {

class WordParser {
public:
    WordParser(const Presentation& p, std::string_view s) : p_(p), s_(s) {}

    Word parse_all() {
        Word w = word();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return w;
    }

private:
    void skip() {
        while (i_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == '*')) ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " in word '" + std::string(s_) + "'");
    }
    bool ident_start(char c) const { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

    std::string ident() {
        std::size_t st = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        return std::string(s_.substr(st, i_ - st));
    }

    Word word() {
        Word w;
        while (true) {
            skip();
            if (i_ >= s_.size() || s_[i_] == ',' || s_[i_] == ']' || s_[i_] == ')') break;
            Word f = factor();
            w.insert(w.end(), f.begin(), f.end());
        }
        return free_reduce(std::move(w));
    }

    Word atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (c == '[') {
            ++i_;
            Word u = word();
            Word result = u;
            bool any = false;
            while (true) {
                skip();
                if (i_ < s_.size() && s_[i_] == ',') {
                    ++i_;
                    result = commutator_word(result, word());
                    any = true;
                } else {
                    break;
                }
            }
            skip();
            if (i_ >= s_.size() || s_[i_] != ']' || !any) fail("malformed commutator");
            ++i_;
            return result;
        }
        if (c == '(') {
            ++i_;
            Word u = word();
            skip();
            if (i_ >= s_.size() || s_[i_] != ')') fail("missing ')'");
            ++i_;
            return u;
        }
        if (c == '1') {
            ++i_;
            return {};
        }
        if (ident_start(c)) return p_.gen(ident());
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Word factor() {
        Word w = atom();
        while (true) {
            skip();
            if (i_ >= s_.size() || s_[i_] != '^') break;
            ++i_;
            skip();
            if (i_ < s_.size() && ident_start(s_[i_])) {
                Word g = p_.gen(ident());
                w = concat(concat(inverse_word(g), w), g);
                continue;
            }
            if (i_ < s_.size() && s_[i_] == '(') {
                Word g = atom();
                w = concat(concat(inverse_word(g), w), g);
                continue;
            }
            std::size_t st = i_;
            if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (st == i_ || (i_ == st + 1 && !std::isdigit(static_cast<unsigned char>(s_[st])))) fail("bad exponent");
            int e = std::stoi(std::string(s_.substr(st, i_ - st)));
            w = power_word(w, e);
        }
        return w;
    }

    const Presentation& p_;
    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace

Word Presentation::parse_word(std::string_view text) const {
    return WordParser(*this, text).parse_all();
}

Word Presentation::parse_relator(std::string_view text) const {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) return parse_word(text);
    if (text.find('=', eq + 1) != std::string_view::npos) throw ParseError("more than one '='");
    return concat(parse_word(text.substr(0, eq)), inverse_word(parse_word(text.substr(eq + 1))));
}

std::vector<Word> Presentation::parse_word_list(std::string_view text) const {
    // split on commas that are not inside brackets
    std::vector<Word> out;
    int depth = 0;
    std::size_t st = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            auto piece = text.substr(st, i - st);
            if (piece.find_first_not_of(" \t") != std::string_view::npos) out.push_back(parse_word(piece));
            st = i + 1;
        } else if (text[i] == '[' || text[i] == '(') {
            ++depth;
        } else if (text[i] == ']' || text[i] == ')') {
            --depth;
        }
    }
    return out;
}

std::string Presentation::format_word(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (i) out << ' ';
        out << names_[static_cast<std::size_t>(std::abs(w[i]) - 1)];
        int e = static_cast<int>(j - i) * (w[i] > 0 ? 1 : -1);
        if (e != 1) out << '^' << e;
        i = j;
    }
    return out.str();
}

Presentation read_presentation(std::istream& in) {
    std::string line;
    Presentation p;
    bool have = false;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        if (!have) {
            if (line.compare(pos, 5, "gens:") != 0) throw ParseError("expected 'gens:' line");
            std::istringstream ls(line.substr(pos + 5));
            std::vector<std::string> names;
            std::string n;
            while (ls >> n) names.push_back(n);
            p = Presentation(names);
            have = true;
            continue;
        }
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        p.add_relator(p.parse_relator(line));
    }
    if (!have) throw ParseError("missing 'gens:' line");
    return p;
}

void write_presentation(std::ostream& out, const Presentation& p) {
    out << "gens:";
    for (const auto& n : p.generator_names()) out << ' ' << n;
    out << '\n';
    for (const auto& r : p.relators()) out << p.format_word(r) << '\n';
}

} // namespace vstab
