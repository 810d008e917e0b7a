#include "wordgrid/word.hpp"

#include <algorithm>

#include "wordgrid/errors.hpp"

namespace wordgrid {

Word::Word(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty())
        throw ParseError("empty word");
    for (char c : letters_) {
        if (c <= ' ' || c == '#')
            throw ParseError("bad letter in word");
        alphabet_.insert(c);
    }
}

void Word::require_nontrivial() const {
    if (letters_.size() < 2 || alphabet_.size() < 2)
        throw TrivialWordError("word '" + letters_ + "' is trivial");
}

namespace {

bool is_pal(const std::string& s, std::size_t begin, std::size_t len) {
    for (std::size_t i = 0; i < len / 2; ++i)
        if (s[begin + i] != s[begin + len - 1 - i])
            return false;
    return true;
}

}  // namespace

WordProfile profile(const Word& w) {
    w.require_nontrivial();
    const std::string& s = w.letters();
    const int ell = static_cast<int>(s.size());

    WordProfile p{};
    p.ell = ell;
    for (int k = 1; k <= ell; ++k)
        if (is_pal(s, 0, k))
            p.c_left = k;
    for (int k = 1; k <= ell; ++k)
        if (is_pal(s, ell - k, k))
            p.c_right = k;
    p.c_repeat = 0;
    for (int k = 1; k < ell; ++k)
        if (s.compare(0, k, s, ell - k, k) == 0)
            p.c_repeat = k;
    p.is_palindrome = (p.c_left == ell);
    return p;
}

Word reverse(const Word& w) {
    std::string s = w.letters();
    std::reverse(s.begin(), s.end());
    return Word(s);
}

}  // namespace wordgrid
