#include "braidlab/nichols.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "braidlab/errors.hpp"

namespace braidlab {

namespace {

void check_braid_matrix(const BraidMatrix& q)
{
    for (const auto& row : q)
        if (row.size() != q.size()) throw InvalidInput("braiding matrix must be square");
}

void multidegrees_rec(size_t rank, int left, Multidegree& cur, std::vector<Multidegree>& out)
{
    if (cur.size() + 1 == rank) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = left; a >= 0; --a) {
        cur.push_back(a);
        multidegrees_rec(rank, left - a, cur, out);
        cur.pop_back();
    }
}

// Multidegrees of total degree n; larger first coordinate first.
std::vector<Multidegree> multidegrees(size_t rank, int n)
{
    std::vector<Multidegree> out;
    if (rank == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    Multidegree cur;
    multidegrees_rec(rank, n, cur, out);
    return out;
}

void words_rec(Multidegree& d, Word& cur, std::vector<Word>& out, int left)
{
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (size_t a = 0; a < d.size(); ++a) {
        if (d[a] == 0) continue;
        --d[a];
        cur.push_back((char)a);
        words_rec(d, cur, out, left - 1);
        cur.pop_back();
        ++d[a];
    }
}

void add_to(TensorVec& v, const Word& w, const CycNum& c)
{
    if (c.is_zero()) return;
    auto it = v.find(w);
    if (it == v.end()) {
        v.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

std::unordered_map<Word, size_t> index_of(const std::vector<Word>& words)
{
    std::unordered_map<Word, size_t> idx;
    for (size_t i = 0; i < words.size(); ++i) idx[words[i]] = i;
    return idx;
}

void check_size(size_t nwords, const NicholsConfig& cfg)
{
    if (nwords > cfg.max_words)
        throw ResourceError("symmetrizer block would be " + std::to_string(nwords) + "x" + std::to_string(nwords) +
                            " (limit " + std::to_string(cfg.max_words) + " words)");
}

// Reduced words of all permutations of n letters, cached per n.
const std::vector<std::vector<int>>& reduced_words(int n)
{
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        out.push_back(lex_least_reduced_word(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cache[n] = std::move(out);
}

// Symmetrizer columns S(u) via the factorization, memoized on words.
class FactorizedSymmetrizer {
public:
    explicit FactorizedSymmetrizer(const BraidMatrix& q) : q_(q) {}
    const TensorVec& operator()(const Word& u)
    {
        auto it = memo_.find(u);
        if (it != memo_.end()) return it->second;
        TensorVec v;
        if (u.size() <= 1) {
            v[u] = CycNum(1);
        } else {
            const TensorVec& tail = (*this)(u.substr(1));
            v = shuffle_letter_left(q_, (int)(unsigned char)u[0], tail);
        }
        return memo_[u] = std::move(v);
    }

private:
    const BraidMatrix& q_;
    std::unordered_map<Word, TensorVec> memo_;
};

Matrix block_from_columns(const std::vector<Word>& words, const std::vector<TensorVec>& cols)
{
    auto idx = index_of(words);
    Matrix m(words.size(), words.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [w, c] : cols[j]) m(idx.at(w), j) = c;
    return m;
}

TensorVec to_tensor(const std::vector<Word>& words, const std::vector<CycNum>& v)
{
    TensorVec t;
    for (size_t i = 0; i < words.size(); ++i)
        if (!v[i].is_zero()) t[words[i]] = v[i];
    return t;
}

// Full NicholsComponent from a symmetrizer block.
NicholsComponent analyze_block(const Multidegree& d, std::vector<Word> words, const Matrix& m,
                               const std::vector<TensorVec>& cols)
{
    NicholsComponent comp;
    comp.degree = d;
    RowEchelon e = row_reduce(m);
    comp.dim = e.rank();
    for (size_t c : e.pivots) {
        comp.basis.push_back(words[c]);
        comp.images.push_back(cols[c]);
    }
    for (const auto& k : kernel(m)) comp.relations.push_back(to_tensor(words, k));
    comp.projection = Matrix(comp.dim, words.size());
    for (size_t i = 0; i < comp.dim; ++i)
        for (size_t j = 0; j < words.size(); ++j) comp.projection(i, j) = e.reduced(i, j);
    comp.words = std::move(words);
    return comp;
}

using PairTensor = std::map<std::pair<Word, Word>, CycNum>;

void add_pair(PairTensor& t, const Word& a, const Word& b, const CycNum& c)
{
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

// Braided coproduct of a word in T(X): sum over subsets S (left factor) with
// the factor prod q_{u_j u_i} for j < i, j right, i left.
PairTensor tensor_coproduct(const BraidMatrix& q, const Word& u)
{
    PairTensor out;
    const size_t n = u.size();
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        Word l, r;
        CycNum f(1);
        for (size_t i = 0; i < n; ++i) {
            bool left = (mask >> i) & 1;
            if (left) {
                for (char rc : r) f *= q[(unsigned char)rc][(unsigned char)u[i]];
                l.push_back(u[i]);
            } else {
                r.push_back(u[i]);
            }
        }
        add_pair(out, l, r, f);
    }
    return out;
}

} // namespace

std::string word_str(const Word& w)
{
    if (w.empty()) return "1";
    std::string s;
    for (char c : w) s += "x" + std::to_string((int)(unsigned char)c);
    return s;
}

Multidegree multidegree_of(const Word& w, size_t rank)
{
    Multidegree d(rank, 0);
    for (char c : w) {
        size_t a = (unsigned char)c;
        if (a >= rank) throw InvalidInput("word letter out of range");
        ++d[a];
    }
    return d;
}

std::vector<Word> words_of(const Multidegree& d)
{
    Multidegree dd = d;
    int n = 0;
    for (int x : d) {
        if (x < 0) throw InvalidInput("negative multidegree");
        n += x;
    }
    std::vector<Word> out;
    Word cur;
    words_rec(dd, cur, out, n);
    return out;
}

std::vector<int> lex_least_reduced_word(const std::vector<int>& perm)
{
    std::vector<int> w = perm;
    const int n = (int)w.size();
    std::vector<int> word;
    while (true) {
        std::vector<int> inv(n);
        for (int j = 0; j < n; ++j) inv[w[j]] = j;
        int i = 0;
        while (i + 1 < n && inv[i] < inv[i + 1]) ++i;
        if (i + 1 >= n) break; // identity
        word.push_back(i + 1);
        // w <- s_i w: swap the values i and i+1
        for (int j = 0; j < n; ++j) {
            if (w[j] == i)
                w[j] = i + 1;
            else if (w[j] == i + 1)
                w[j] = i;
        }
    }
    return word;
}

TensorVec shuffle_letter_left(const BraidMatrix& q, int a, const TensorVec& v)
{
    TensorVec out;
    for (const auto& [w, c] : v) {
        CycNum f = c;
        for (size_t k = 0; k <= w.size(); ++k) {
            Word nw = w.substr(0, k);
            nw.push_back((char)a);
            nw += w.substr(k);
            add_to(out, nw, f);
            if (k < w.size()) f *= q[a][(unsigned char)w[k]];
        }
    }
    return out;
}

TensorVec shuffle_letter_right(const BraidMatrix& q, const TensorVec& v, int a)
{
    TensorVec out;
    for (const auto& [w, c] : v) {
        CycNum f = c;
        for (size_t k = w.size() + 1; k-- > 0;) {
            Word nw = w.substr(0, k);
            nw.push_back((char)a);
            nw += w.substr(k);
            add_to(out, nw, f);
            if (k > 0) f *= q[(unsigned char)w[k - 1]][a];
        }
    }
    return out;
}

namespace {
void shuffle_words(const BraidMatrix& q, const Word& u, const Word& v, const Word& prefix, const CycNum& f,
                   TensorVec& out)
{
    if (u.empty() || v.empty()) {
        add_to(out, prefix + u + v, f);
        return;
    }
    shuffle_words(q, u.substr(1), v, prefix + u[0], f, out);
    CycNum g = f;
    for (char a : u) g *= q[(unsigned char)a][(unsigned char)v[0]];
    shuffle_words(q, u, v.substr(1), prefix + v[0], g, out);
}
} // namespace

TensorVec shuffle(const BraidMatrix& q, const TensorVec& u, const TensorVec& v)
{
    TensorVec out;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) shuffle_words(q, a, b, "", ca * cb, out);
    return out;
}

Matrix symmetrizer_block_permutations(const BraidMatrix& q, const Multidegree& d, const NicholsConfig& cfg)
{
    check_braid_matrix(q);
    if (d.size() != q.size()) throw InvalidInput("multidegree length differs from rank");
    int n = std::accumulate(d.begin(), d.end(), 0);
    if (n > cfg.max_degree)
        throw ResourceError("symmetrizer degree " + std::to_string(n) + " exceeds cutoff " +
                            std::to_string(cfg.max_degree));
    std::vector<Word> words = words_of(d);
    check_size(words.size(), cfg);
    auto idx = index_of(words);
    const size_t r = q.size();
    const auto& rws = reduced_words(n);
    const int maxc = n * (n - 1) / 2;
    // powers q_ab^c
    std::vector<std::vector<CycNum>> pw(r * r);
    for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < r; ++b) {
            auto& v = pw[a * r + b];
            v.push_back(CycNum(1));
            for (int c = 1; c <= maxc; ++c) v.push_back(v.back() * q[a][b]);
        }
    Matrix m(words.size(), words.size());
    for (size_t j = 0; j < words.size(); ++j) {
        std::map<std::pair<size_t, std::vector<int>>, int64_t> acc;
        for (const auto& rw : rws) {
            Word cur = words[j];
            std::vector<int> counts(r * r, 0);
            for (size_t t = rw.size(); t-- > 0;) {
                int i = rw[t];
                unsigned char a = cur[i - 1], b = cur[i];
                ++counts[a * r + b];
                std::swap(cur[i - 1], cur[i]);
            }
            ++acc[{idx.at(cur), counts}];
        }
        for (const auto& [key, mult] : acc) {
            CycNum f(mult);
            for (size_t ab = 0; ab < r * r; ++ab)
                if (key.second[ab]) f *= pw[ab][key.second[ab]];
            m(key.first, j) += f;
        }
    }
    return m;
}

Matrix symmetrizer_block_factorized(const BraidMatrix& q, const Multidegree& d, const NicholsConfig& cfg)
{
    check_braid_matrix(q);
    if (d.size() != q.size()) throw InvalidInput("multidegree length differs from rank");
    std::vector<Word> words = words_of(d);
    check_size(words.size(), cfg);
    FactorizedSymmetrizer S(q);
    std::vector<TensorVec> cols;
    for (const auto& w : words) cols.push_back(S(w));
    return block_from_columns(words, cols);
}

Matrix quantum_symmetrizer(const BraidMatrix& q, int n, const NicholsConfig& cfg)
{
    check_braid_matrix(q);
    if (n < 0) throw InvalidInput("negative degree");
    const size_t r = q.size();
    size_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= r;
        if (total > cfg.max_words) check_size(total, cfg);
    }
    if (n > cfg.max_degree)
        throw ResourceError("symmetrizer degree " + std::to_string(n) + " exceeds cutoff " +
                            std::to_string(cfg.max_degree) + "; matrix would be " + std::to_string(total) + "x" +
                            std::to_string(total));
    // all words of length n in lexicographic order
    std::vector<Word> all;
    for (const auto& d : multidegrees(r, n))
        for (auto& w : words_of(d)) all.push_back(w);
    std::sort(all.begin(), all.end());
    auto idx = index_of(all);
    Matrix full(all.size(), all.size());
    for (const auto& d : multidegrees(r, n)) {
        auto words = words_of(d);
        Matrix b = symmetrizer_block_permutations(q, d, cfg);
        for (size_t i = 0; i < words.size(); ++i)
            for (size_t j = 0; j < words.size(); ++j) full(idx.at(words[i]), idx.at(words[j])) = b(i, j);
    }
    return full;
}

size_t NicholsData::dim(const Multidegree& d) const
{
    auto it = components.find(d);
    if (it == components.end()) throw InvalidInput("multidegree outside computed range");
    return it->second.dim;
}

size_t NicholsData::total() const { return std::accumulate(hilbert.begin(), hilbert.end(), size_t(0)); }

const NicholsComponent& NicholsData::component(const Multidegree& d) const
{
    auto it = components.find(d);
    if (it == components.end()) throw InvalidInput("multidegree outside computed range");
    return it->second;
}

NicholsData nichols_dimensions(const BraidMatrix& q, int max_total_degree, const NicholsConfig& cfg)
{
    check_braid_matrix(q);
    if (max_total_degree < 0) throw InvalidInput("negative degree bound");
    if (max_total_degree > cfg.max_degree)
        throw ResourceError("requested degree " + std::to_string(max_total_degree) + " exceeds cutoff " +
                            std::to_string(cfg.max_degree));
    NicholsData data;
    data.q = q;
    data.max_degree = max_total_degree;
    FactorizedSymmetrizer S(q);
    int zero_run = 0;
    for (int n = 0; n <= max_total_degree; ++n) {
        size_t hn = 0;
        for (const auto& d : multidegrees(q.size(), n)) {
            std::vector<Word> words = words_of(d);
            check_size(words.size(), cfg);
            std::vector<TensorVec> cols;
            cols.reserve(words.size());
            for (const auto& w : words) cols.push_back(S(w));
            Matrix m = block_from_columns(words, cols);
            NicholsComponent comp = analyze_block(d, std::move(words), m, cols);
            hn += comp.dim;
            data.components.emplace(d, std::move(comp));
        }
        data.hilbert.push_back(hn);
        zero_run = hn == 0 ? zero_run + 1 : 0;
        if (zero_run == 3 && !data.finite) {
            data.finite = true;
            data.gap_start = n - 2;
        }
    }
    return data;
}

std::map<Multidegree, size_t> shuffle_dimensions(const BraidMatrix& q, int max_total_degree, const NicholsConfig& cfg)
{
    check_braid_matrix(q);
    if (max_total_degree > cfg.max_degree)
        throw ResourceError("requested degree " + std::to_string(max_total_degree) + " exceeds cutoff " +
                            std::to_string(cfg.max_degree));
    const size_t r = q.size();
    std::map<Multidegree, std::vector<TensorVec>> bases;
    std::map<Multidegree, size_t> dims;
    Multidegree zero(r, 0);
    bases[zero] = {TensorVec{{Word(), CycNum(1)}}};
    dims[zero] = 1;
    for (int n = 1; n <= max_total_degree; ++n)
        for (const auto& d : multidegrees(r, n)) {
            std::vector<Word> words = words_of(d);
            check_size(words.size(), cfg);
            auto idx = index_of(words);
            SpanBuilder span(words.size());
            for (size_t a = 0; a < r; ++a) {
                if (d[a] == 0) continue;
                Multidegree prev = d;
                --prev[a];
                for (const auto& b : bases[prev]) {
                    TensorVec prod = shuffle_letter_right(q, b, (int)a);
                    std::vector<CycNum> v(words.size());
                    for (const auto& [w, c] : prod) v[idx.at(w)] = c;
                    span.insert(std::move(v));
                }
            }
            std::vector<TensorVec> basis;
            for (const auto& v : span.basis()) basis.push_back(to_tensor(words, v));
            dims[d] = basis.size();
            bases[d] = std::move(basis);
        }
    return dims;
}

std::string TotalDimension::str() const { return (finite ? "" : ">= ") + std::to_string(value); }

TotalDimension total_dimension(const BraidMatrix& q, int bound, const NicholsConfig& cfg)
{
    NicholsData d = nichols_dimensions(q, bound, cfg);
    TotalDimension t;
    t.finite = d.finite;
    t.value = d.total();
    t.degrees_scanned = bound;
    return t;
}

std::vector<CycNum> GradedQuotient::reduce(const Multidegree& d, const TensorVec& v) const
{
    auto it = components.find(d);
    if (it == components.end()) throw InvalidInput("multidegree outside computed range");
    const auto& comp = it->second;
    std::vector<CycNum> x(comp.dim);
    if (comp.dim == 0) return x;
    auto idx = index_of(comp.words);
    for (const auto& [w, c] : v) {
        size_t j = idx.at(w);
        for (size_t i = 0; i < comp.dim; ++i)
            if (!comp.projection(i, j).is_zero()) x[i] += comp.projection(i, j) * c;
    }
    return x;
}

bool GradedQuotient::is_zero_mod(const TensorVec& v) const
{
    std::map<Multidegree, TensorVec> parts;
    for (const auto& [w, c] : v) parts[multidegree_of(w, q.size())][w] = c;
    for (const auto& [d, t] : parts)
        for (const auto& x : reduce(d, t))
            if (!x.is_zero()) return false;
    return true;
}

GradedQuotient quotient_of(const NicholsData& d)
{
    GradedQuotient g;
    g.q = d.q;
    g.max_degree = d.max_degree;
    g.components = d.components;
    return g;
}

GradedQuotient quotient_by_relations(const BraidMatrix& q, const std::vector<TensorVec>& relations, int max_degree)
{
    check_braid_matrix(q);
    const size_t r = q.size();
    std::vector<std::pair<Multidegree, TensorVec>> rels;
    for (const auto& rel : relations) {
        if (rel.empty()) continue;
        Multidegree d = multidegree_of(rel.begin()->first, r);
        for (const auto& [w, c] : rel)
            if (multidegree_of(w, r) != d) throw InvalidInput("relation is not homogeneous");
        rels.emplace_back(d, rel);
    }
    GradedQuotient g;
    g.q = q;
    g.max_degree = max_degree;
    for (int n = 0; n <= max_degree; ++n)
        for (const auto& d : multidegrees(r, n)) {
            std::vector<Word> words = words_of(d);
            auto idx = index_of(words);
            SpanBuilder ideal(words.size());
            for (const auto& [rd, rel] : rels) {
                bool fits = true;
                for (size_t a = 0; a < r; ++a) fits = fits && rd[a] <= d[a];
                if (!fits) continue;
                // all u * rel * v: z runs over words of degree d - rd, split at every position
                Multidegree rest = d;
                for (size_t a = 0; a < r; ++a) rest[a] -= rd[a];
                for (const auto& z : words_of(rest))
                    for (size_t lu = 0; lu <= z.size(); ++lu) {
                        Word u = z.substr(0, lu), v = z.substr(lu);
                        std::vector<CycNum> vec(words.size());
                        for (const auto& [rw, c] : rel) vec[idx.at(u + rw + v)] += c;
                        ideal.insert(std::move(vec));
                    }
            }
            NicholsComponent comp;
            comp.degree = d;
            std::vector<bool> is_piv(words.size(), false);
            for (size_t p : ideal.pivots()) is_piv[p] = true;
            std::vector<size_t> basis_pos;
            for (size_t j = 0; j < words.size(); ++j)
                if (!is_piv[j]) basis_pos.push_back(j);
            comp.dim = basis_pos.size();
            std::vector<size_t> coord(words.size(), SIZE_MAX);
            for (size_t i = 0; i < basis_pos.size(); ++i) {
                coord[basis_pos[i]] = i;
                comp.basis.push_back(words[basis_pos[i]]);
                comp.images.push_back(TensorVec{{words[basis_pos[i]], CycNum(1)}});
            }
            comp.projection = Matrix(comp.dim, words.size());
            for (size_t i = 0; i < basis_pos.size(); ++i) comp.projection(i, basis_pos[i]) = CycNum(1);
            for (size_t k = 0; k < ideal.size(); ++k) {
                const auto& b = ideal.basis()[k];
                size_t p = ideal.pivots()[k];
                for (size_t j = 0; j < words.size(); ++j)
                    if (!is_piv[j] && !b[j].is_zero()) comp.projection(coord[j], p) = -b[j];
                comp.relations.push_back(to_tensor(words, b));
            }
            comp.words = std::move(words);
            g.components.emplace(d, std::move(comp));
        }
    return g;
}

namespace {

// Element of A (x) A on basis words.
using AA = PairTensor;

// Reduce a T(X) (x) T(X) tensor into A (x) A.
AA reduce_pair(const GradedQuotient& a, const PairTensor& t)
{
    const size_t r = a.q.size();
    std::map<std::pair<Multidegree, Multidegree>, PairTensor> parts;
    for (const auto& [k, c] : t) parts[{multidegree_of(k.first, r), multidegree_of(k.second, r)}][k] = c;
    AA out;
    for (const auto& [dd, part] : parts) {
        const auto& cl = a.components.at(dd.first);
        const auto& cr = a.components.at(dd.second);
        if (cl.dim == 0 || cr.dim == 0) continue;
        // group by left word, reduce right, then reduce left
        std::map<Word, TensorVec> by_left;
        for (const auto& [k, c] : part) by_left[k.first][k.second] = c;
        std::vector<std::vector<CycNum>> acc(cl.dim, std::vector<CycNum>(cr.dim));
        for (const auto& [lw, rt] : by_left) {
            auto rc = a.reduce(dd.second, rt);
            auto lc = a.reduce(dd.first, TensorVec{{lw, CycNum(1)}});
            for (size_t i = 0; i < cl.dim; ++i) {
                if (lc[i].is_zero()) continue;
                for (size_t j = 0; j < cr.dim; ++j)
                    if (!rc[j].is_zero()) acc[i][j] += lc[i] * rc[j];
            }
        }
        for (size_t i = 0; i < cl.dim; ++i)
            for (size_t j = 0; j < cr.dim; ++j) add_pair(out, cl.basis[i], cr.basis[j], acc[i][j]);
    }
    return out;
}

// Normal form of a product of two basis words, as a combination of basis words.
TensorVec multiply(const GradedQuotient& a, const Word& x, const Word& y)
{
    Word w = x + y;
    Multidegree d = multidegree_of(w, a.q.size());
    auto coords = a.reduce(d, TensorVec{{w, CycNum(1)}});
    const auto& comp = a.components.at(d);
    TensorVec out;
    for (size_t i = 0; i < comp.dim; ++i) add_to(out, comp.basis[i], coords[i]);
    return out;
}

CycNum braid_scalar(const BraidMatrix& q, const Word& u, const Word& v)
{
    CycNum f(1);
    for (char a : u)
        for (char b : v) f *= q[(unsigned char)a][(unsigned char)b];
    return f;
}

} // namespace

BialgebraReport check_bialgebra_axiom(const GradedQuotient& a, int max_degree)
{
    if (max_degree > a.max_degree) throw InvalidInput("bialgebra check degree exceeds computed range");
    std::vector<Word> basis;
    for (const auto& [d, comp] : a.components) {
        int n = std::accumulate(d.begin(), d.end(), 0);
        if (n <= max_degree)
            for (const auto& b : comp.basis) basis.push_back(b);
    }
    std::sort(basis.begin(), basis.end(), [](const Word& x, const Word& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    std::map<Word, AA> delta;
    auto coproduct = [&](const Word& b) -> const AA& {
        auto it = delta.find(b);
        if (it != delta.end()) return it->second;
        return delta[b] = reduce_pair(a, tensor_coproduct(a.q, b));
    };
    for (const auto& x : basis)
        for (const auto& y : basis) {
            if ((int)(x.size() + y.size()) > max_degree) continue;
            // left side: Delta of the normal form of x*y
            AA lhs;
            for (const auto& [w, c] : multiply(a, x, y))
                for (const auto& [k, e] : coproduct(w)) add_pair(lhs, k.first, k.second, c * e);
            // right side
            AA rhs;
            for (const auto& [kx, cx] : coproduct(x))
                for (const auto& [ky, cy] : coproduct(y)) {
                    CycNum f = cx * cy * braid_scalar(a.q, kx.second, ky.first);
                    TensorVec l = multiply(a, kx.first, ky.first);
                    TensorVec r = multiply(a, kx.second, ky.second);
                    for (const auto& [lw, lc] : l)
                        for (const auto& [rw, rc] : r) add_pair(rhs, lw, rw, f * lc * rc);
                }
            if (lhs != rhs) {
                bool equal = lhs.size() == rhs.size();
                if (equal)
                    for (const auto& [k, c] : lhs) {
                        auto it = rhs.find(k);
                        if (it == rhs.end() || it->second != c) {
                            equal = false;
                            break;
                        }
                    }
                if (!equal) return BialgebraReport{false, std::make_pair(x, y)};
            }
        }
    return {};
}

BialgebraReport check_bialgebra_axiom(const NicholsData& d, int max_degree)
{
    return check_bialgebra_axiom(quotient_of(d), max_degree);
}

std::vector<CoproductTerm> braided_coproduct(const NicholsData& d, const Word& word, int k)
{
    const size_t r = d.rank();
    Multidegree md = multidegree_of(word, r);
    const int n = (int)word.size();
    if (n > d.max_degree) throw InvalidInput("word degree " + std::to_string(n) + " outside computed range");
    if (k < 0 || k > n) throw InvalidInput("coproduct split out of range");
    const auto& comp = d.component(md);
    // image of the word in the shuffle picture
    TensorVec img;
    auto coords = quotient_of(d).reduce(md, TensorVec{{word, CycNum(1)}});
    for (size_t i = 0; i < comp.dim; ++i)
        for (const auto& [w, c] : comp.images[i]) add_to(img, w, coords[i] * c);
    // deconcatenate and group by bidegree
    std::map<std::pair<Multidegree, Multidegree>, PairTensor> parts;
    for (const auto& [w, c] : img) {
        Word l = w.substr(0, k), rr = w.substr(k);
        add_pair(parts[{multidegree_of(l, r), multidegree_of(rr, r)}], l, rr, c);
    }
    std::vector<CoproductTerm> out;
    for (const auto& [dd, part] : parts) {
        const auto& cl = d.component(dd.first);
        const auto& cr = d.component(dd.second);
        // unknowns c_ij with sum c_ij img_l[i] (x) img_r[j] = part
        std::vector<std::pair<Word, Word>> eqs;
        for (const auto& lw : cl.words)
            for (const auto& rw : cr.words) eqs.emplace_back(lw, rw);
        Matrix m(eqs.size(), cl.dim * cr.dim);
        std::vector<CycNum> rhs(eqs.size());
        std::map<std::pair<Word, Word>, size_t> row;
        for (size_t e = 0; e < eqs.size(); ++e) row[eqs[e]] = e;
        for (size_t i = 0; i < cl.dim; ++i)
            for (size_t j = 0; j < cr.dim; ++j)
                for (const auto& [lw, lc] : cl.images[i])
                    for (const auto& [rw, rc] : cr.images[j]) m(row.at({lw, rw}), i * cr.dim + j) += lc * rc;
        for (const auto& [key, c] : part) rhs[row.at(key)] = c;
        std::vector<CycNum> x;
        if (!solve(m, rhs, x)) throw std::logic_error("deconcatenation left the Nichols subspace");
        for (size_t i = 0; i < cl.dim; ++i)
            for (size_t j = 0; j < cr.dim; ++j)
                if (!x[i * cr.dim + j].is_zero())
                    out.push_back(CoproductTerm{cl.basis[i], cr.basis[j], x[i * cr.dim + j]});
    }
    return out;
}

UnrolledReport is_sufficiently_unrolled(const BraidedObject& x, const NicholsData& d)
{
    UnrolledReport rep;
    rep.truncated = !d.finite;
    rep.up_to_degree = d.max_degree;
    if (x.rank() != d.rank()) throw InvalidInput("braided object and Nichols data have different rank");
    const GradingGroup& g = x.bichar.group();
    std::vector<std::pair<Multidegree, Degree>> supp;
    for (const auto& [md, comp] : d.components) {
        if (comp.dim == 0) continue;
        Degree deg = g.zero();
        for (size_t i = 0; i < md.size(); ++i) deg = g.add(deg, g.scale(x.degrees[i], md[i]));
        supp.emplace_back(md, deg);
    }
    for (const auto& [a, ga] : supp)
        for (const auto& [b, gb] : supp) {
            Degree s = g.add(ga, gb);
            Multidegree ab(a.size());
            for (size_t i = 0; i < a.size(); ++i) ab[i] = a[i] + b[i];
            for (const auto& [c, gc] : supp)
                if (gc == s && c != ab) {
                    rep.ok = false;
                    rep.witness = std::array<Multidegree, 3>{a, b, c};
                    return rep;
                }
        }
    return rep;
}

BraidedObject preset_rank1(int64_t order, int64_t k)
{
    if (order < 1) throw InvalidInput("root of unity order must be >= 1");
    Bicharacter b(GradingGroup(1, {}), {{Rational(2 * mod64(k, order), order)}});
    BraidedObject x{b, {}};
    x.degrees.push_back(b.group().make({Rational(1)}));
    return x;
}

BraidedObject preset_cartan_a2(int64_t p)
{
    if (p < 2) throw InvalidInput("p must be >= 2");
    Bicharacter b(GradingGroup(2, {}), {{Rational(2, p), Rational(-1, p)}, {Rational(-1, p), Rational(2, p)}});
    BraidedObject x{b, {}};
    x.degrees = {b.group().make({Rational(1), Rational(0)}), b.group().make({Rational(0), Rational(1)})};
    return x;
}

BraidedObject preset_parabolic2(int64_t p)
{
    if (p < 2) throw InvalidInput("p must be >= 2");
    Bicharacter b(GradingGroup(2, {}), {{Rational(2, p), Rational(-1, p)}, {Rational(-1, p), Rational(1)}});
    BraidedObject x{b, {}};
    x.degrees = {b.group().make({Rational(1), Rational(0)}), b.group().make({Rational(0), Rational(1)})};
    return x;
}

BraidedObject preset_two_fermions()
{
    Bicharacter b(GradingGroup(2, {}), {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    BraidedObject x{b, {}};
    x.degrees = {b.group().make({Rational(1), Rational(0)}), b.group().make({Rational(0), Rational(1)})};
    return x;
}

BraidedObject preset_rank1_torsion(int64_t m, int64_t a_num, int64_t a_den)
{
    Bicharacter b(GradingGroup(0, {m}), {{Rational(a_num, a_den)}});
    BraidedObject x{b, {}};
    x.degrees.push_back(b.group().make({}, {1}));
    return x;
}

} // namespace braidlab
