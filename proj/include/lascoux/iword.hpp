#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tableaux.hpp"

// i-words and their decomposition into parenthesis forms.
//
// Scanning a tableau in column reading order, every cell meeting {i, i+1}
// contributes one token: ")" for i alone, "(" for i+1 alone, and the fused
// token ")-(" for both.  The tokens expand to a parenthesis string in which
// ")-(" occupies three characters.  Match parentheses in the usual way,
// ignoring "-"; then group characters into equivalence classes generated by
//   * a matched pair together with everything between it, and
//   * the three characters of each ")-(" token.
// Classes are contiguous runs of whole tokens.  A class is a
//   right form     if it begins with an unpaired ")" only,
//   left form      if it ends with an unpaired "(" only,
//   combined form  if both,
//   null form      if neither.
// Reading left to right and skipping null forms, a word always looks like
// (right forms)*, at most one combined form, (left forms)*.

namespace lascoux {

enum class IToken { right, left, both };

/// An i-word: the token sequence plus, when it came from a tableau, the cell
/// each token originated from.
struct IWord {
    std::vector<IToken> tokens;
    std::vector<CellRef> origins;  // empty for words parsed from text

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }

    std::string str() const {
        std::string s;
        for (IToken t : tokens)
            s += (t == IToken::right) ? ")" : (t == IToken::left) ? "(" : ")-(";
        return s;
    }

    /// Parse a token string such as "())-())-(".  The dash only ever occurs
    /// inside ")-(", so the tokenization is unambiguous.
    static IWord parse(std::string_view s) {
        IWord w;
        std::size_t p = 0;
        while (p < s.size()) {
            if (s.compare(p, 3, ")-(") == 0) {
                w.tokens.push_back(IToken::both);
                p += 3;
            } else if (s[p] == ')') {
                w.tokens.push_back(IToken::right);
                ++p;
            } else if (s[p] == '(') {
                w.tokens.push_back(IToken::left);
                ++p;
            } else {
                throw parse_error("i-word may only contain '(', ')' and ')-('");
            }
        }
        return w;
    }

    bool operator==(const IWord&) const = default;
};

enum class FormKind { null_form, right_form, left_form, combined_form };

/// One equivalence class: a contiguous, inclusive range of token indices.
struct FormClass {
    int first_token = 0;
    int last_token = 0;
    FormKind kind = FormKind::null_form;
    bool operator==(const FormClass&) const = default;
};

struct FormDecomposition {
    std::vector<FormClass> classes;  // in word order, covering every token
    int combined = -1;               // index into classes, -1 when absent
    int last_right = -1;             // index of the last right form
    int first_left = -1;             // index of the first left form
    int phi = 0;                     // number of right forms
    int epsilon = 0;                 // number of left forms

    bool has_combined() const { return combined >= 0; }
};

inline FormDecomposition decompose_forms(const IWord& w) {
    // expand tokens to characters, remembering each character's token
    struct Ch { char c; int token; };
    std::vector<Ch> chars;
    std::vector<std::pair<int, int>> spans;  // joined character intervals
    for (int t = 0; t < static_cast<int>(w.tokens.size()); ++t) {
        switch (w.tokens[t]) {
            case IToken::right: chars.push_back({')', t}); break;
            case IToken::left: chars.push_back({'(', t}); break;
            case IToken::both: {
                int a = static_cast<int>(chars.size());
                chars.push_back({')', t});
                chars.push_back({'-', t});
                chars.push_back({'(', t});
                spans.emplace_back(a, a + 2);
                break;
            }
        }
    }

    const int n = static_cast<int>(chars.size());
    std::vector<bool> paired(n, false);
    std::vector<int> stack;
    for (int p = 0; p < n; ++p) {
        if (chars[p].c == '(') {
            stack.push_back(p);
        } else if (chars[p].c == ')' && !stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            paired[p] = paired[q] = true;
            spans.emplace_back(q, p);
        }
    }

    // glue: characters p, p+1 belong together iff some span covers both
    std::vector<bool> join(n > 0 ? n - 1 : 0, false);
    for (auto [a, b] : spans)
        for (int p = a; p < b; ++p) join[p] = true;

    FormDecomposition d;
    int start = 0;
    while (start < n) {
        int end = start;
        while (end + 1 < n && join[end]) ++end;
        bool open_right = chars[start].c == ')' && !paired[start];
        bool open_left = chars[end].c == '(' && !paired[end];
        FormClass cls;
        cls.first_token = chars[start].token;
        cls.last_token = chars[end].token;
        cls.kind = open_right && open_left ? FormKind::combined_form
                 : open_right              ? FormKind::right_form
                 : open_left               ? FormKind::left_form
                                           : FormKind::null_form;
        int idx = static_cast<int>(d.classes.size());
        switch (cls.kind) {
            case FormKind::right_form:
                ++d.phi;
                d.last_right = idx;
                break;
            case FormKind::left_form:
                ++d.epsilon;
                if (d.first_left < 0) d.first_left = idx;
                break;
            case FormKind::combined_form:
                if (d.combined >= 0) throw error("internal: two combined forms");
                d.combined = idx;
                break;
            case FormKind::null_form:
                break;
        }
        d.classes.push_back(cls);
        start = end + 1;
    }
    return d;
}

/// The token substring spanned by one class (handy in tests and messages).
inline std::string class_string(const IWord& w, const FormClass& cls) {
    IWord part;
    part.tokens.assign(w.tokens.begin() + cls.first_token,
                       w.tokens.begin() + cls.last_token + 1);
    return part.str();
}

}  // namespace lascoux
