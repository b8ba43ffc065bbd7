#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace vstab {

// Letters are signed generator numbers: +(g+1) is generator g, -(g+1) its inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);
Word power_word(const Word& w, int e);
Word commutator_word(const Word& u, const Word& v); // u^-1 v^-1 u v
Word concat(const Word& u, const Word& v);

class Presentation {
public:
    Presentation() = default;
    explicit Presentation(std::vector<std::string> generator_names);

    std::size_t generator_count() const { return names_.size(); }
    const std::vector<std::string>& generator_names() const { return names_; }
    const std::vector<Word>& relators() const { return relators_; }

    int generator_index(std::string_view name) const; // -1 when absent
    Word gen(std::string_view name) const;            // single-letter word

    // stored freely reduced; empty relators are dropped
    void add_relator(Word w);
    void add_relator(std::string_view text) { add_relator(parse_relator(text)); }

    // Word notation: generator names, x^n, x^-1, x^y (conjugation), [u, v],
    // parentheses and juxtaposition. "lhs = rhs" parses as lhs rhs^-1.
    Word parse_word(std::string_view text) const;
    Word parse_relator(std::string_view text) const;
    std::vector<Word> parse_word_list(std::string_view comma_separated) const;
    std::string format_word(const Word& w) const;

private:
    std::vector<std::string> names_;
    std::vector<Word> relators_;
};

// "gens: x y z" followed by one relator per line; '#' starts a comment line
Presentation read_presentation(std::istream& in);
void write_presentation(std::ostream& out, const Presentation& p);

} // namespace vstab
