#pragma once

#include <set>
#include <string>

namespace wordgrid {

class Word {
public:
    explicit Word(std::string letters);

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    char operator[](std::size_t i) const { return letters_[i]; }
    const std::set<char>& alphabet() const { return alphabet_; }

    // Words of length < 2 or with a single distinct letter are rejected by
    // every analysis operation.
    void require_nontrivial() const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }

private:
    std::string letters_;
    std::set<char> alphabet_;
};

struct WordProfile {
    int ell;
    int c_left;    // longest palindromic prefix
    int c_right;   // longest palindromic suffix
    int c_repeat;  // longest proper prefix that is also a proper suffix
    bool is_palindrome;
};

WordProfile profile(const Word& w);

Word reverse(const Word& w);

}  // namespace wordgrid
