#include "ddyck/dyck.hpp"

#include <algorithm>

namespace ddyck {

Int binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    Int r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;  // exact: r is C(a-b+i, i) after this step
    }
    return r;
}

DyckPath::DyckPath(std::string word) : word_(std::move(word)) {
    long long height = 0;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        char c = word_[i];
        if (c == 'U') {
            ++height;
        } else if (c == 'D') {
            --height;
            if (height < 0)
                throw Error(ErrorCode::DipsBelowAxis,
                            "path dips below the axis at step " + std::to_string(i + 1));
        } else {
            throw Error(ErrorCode::BadCharacter,
                        std::string("path word may contain only 'U' and 'D', got '") + c + "'");
        }
        // Corner heights: a DU corner is a valley, a UD corner is a peak.
        if (i + 1 < word_.size()) {
            if (c == 'D' && word_[i + 1] == 'U') valleys_.push_back(static_cast<int>(height));
            if (c == 'U' && word_[i + 1] == 'D') peaks_.push_back(static_cast<int>(height));
        }
    }
    if (height != 0)
        throw Error(ErrorCode::NotBalanced, "path has unequal numbers of U and D steps");
}

DyckPath parse_path(const std::string& word) { return DyckPath(word); }

bool is_d_dyck(const DyckPath& p, int d) {
    const std::vector<int>& v = p.valleys();
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] - v[i - 1] < d) return false;
    return true;
}

Int count_d_dyck(int n, int d) {
    if (d < 1)
        throw Error(ErrorCode::UnsupportedD, "closed-form count requires d >= 1");
    if (n < 0) return 0;
    // Upper limit clamped to >= 0: the k=0 term must survive so the empty
    // path is counted (the raw floor is -1 at n=0, d=1).
    long long kmax = std::max(0LL, (static_cast<long long>(n) + d - 2) / d);
    Int total = 0;
    for (long long k = 0; k <= kmax; ++k)
        total += binomial(n - static_cast<long long>(d - 1) * (k - 1), 2 * k);
    return total;
}

namespace {

// Shared generator: extends the word one step at a time, U before D, pruning
// on the valley condition when `restricted` is set. A new valley appears
// exactly when a U follows a D; its height must clear last_valley + d once a
// previous valley exists.
void generate(std::string& word, int ups, int downs, int n, bool restricted, int d,
              bool have_valley, int last_valley,
              const std::function<void(const DyckPath&)>& visit) {
    if (ups + downs == 2 * n) {
        visit(DyckPath(word));
        return;
    }
    bool after_d = !word.empty() && word.back() == 'D';
    int height = ups - downs;
    if (ups < n) {
        bool makes_valley = after_d;
        if (!(restricted && makes_valley && have_valley && height < last_valley + d)) {
            word.push_back('U');
            generate(word, ups + 1, downs, n, restricted, d,
                     have_valley || makes_valley, makes_valley ? height : last_valley, visit);
            word.pop_back();
        }
    }
    if (downs < ups) {
        word.push_back('D');
        generate(word, ups, downs + 1, n, restricted, d, have_valley, last_valley, visit);
        word.pop_back();
    }
}

}  // namespace

void for_each_dyck(int n, const std::function<void(const DyckPath&)>& visit) {
    std::string word;
    word.reserve(2 * static_cast<std::size_t>(std::max(n, 0)));
    generate(word, 0, 0, std::max(n, 0), false, 0, false, 0, visit);
}

void for_each_d_dyck(int n, int d, const std::function<void(const DyckPath&)>& visit) {
    std::string word;
    word.reserve(2 * static_cast<std::size_t>(std::max(n, 0)));
    generate(word, 0, 0, std::max(n, 0), true, d, false, 0, visit);
}

Int catalan(int n) {
    if (n < 0) return 0;
    return binomial(2LL * n, n) / (n + 1);
}

DyckPath reflect(const DyckPath& p) {
    std::string w(p.word().rbegin(), p.word().rend());
    for (char& c : w) c = (c == 'U') ? 'D' : 'U';
    return DyckPath(std::move(w));
}

RunFactorization run_factorization(const DyckPath& p) {
    RunFactorization runs;
    const std::string& w = p.word();
    std::size_t i = 0;
    while (i < w.size()) {
        int a = 0, b = 0;
        while (i < w.size() && w[i] == 'U') { ++a; ++i; }
        while (i < w.size() && w[i] == 'D') { ++b; ++i; }
        runs.emplace_back(a, b);
    }
    return runs;
}

}  // namespace ddyck
