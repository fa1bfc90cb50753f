#include "cyq/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace cyq {

void Ambient::validate() const {
    if (dims.empty()) throw std::invalid_argument("Ambient: at least one factor required");
    for (unsigned n : dims)
        if (n < 1) throw std::invalid_argument("Ambient: factor dimensions must be >= 1");
}

GenPermMatrix::GenPermMatrix(std::vector<unsigned> col, std::vector<unsigned> exp)
    : col_(std::move(col)), exp_(std::move(exp)) {
    if (col_.size() != exp_.size()) throw std::invalid_argument("GenPermMatrix: size mismatch");
    std::vector<bool> seen(col_.size(), false);
    for (unsigned c : col_) {
        if (c >= col_.size() || seen[c])
            throw std::invalid_argument("GenPermMatrix: columns must form a permutation");
        seen[c] = true;
    }
}

GenPermMatrix GenPermMatrix::identity(unsigned size) {
    std::vector<unsigned> col(size), exp(size, 0);
    std::iota(col.begin(), col.end(), 0u);
    return GenPermMatrix(std::move(col), std::move(exp));
}

unsigned GenPermMatrix::row_of_col(unsigned col) const {
    for (unsigned r = 0; r < col_.size(); ++r)
        if (col_[r] == col) return r;
    throw std::logic_error("GenPermMatrix::row_of_col: not a permutation");
}

namespace {

std::vector<unsigned> invert_permutation(const std::vector<unsigned>& sigma) {
    std::vector<unsigned> inv(sigma.size());
    std::vector<bool> seen(sigma.size(), false);
    for (unsigned i = 0; i < sigma.size(); ++i) {
        if (sigma[i] >= sigma.size() || seen[sigma[i]])
            throw std::invalid_argument("MonomialAutomorphism: sigma is not a permutation");
        seen[sigma[i]] = true;
        inv[sigma[i]] = i;
    }
    return inv;
}

}  // namespace

MonomialAutomorphism::MonomialAutomorphism(Ambient amb, std::vector<unsigned> sigma,
                                           unsigned long root_order,
                                           std::vector<GenPermMatrix> mats)
    : amb_(std::move(amb)), sigma_(std::move(sigma)), root_order_(root_order),
      mats_(std::move(mats)) {
    amb_.validate();
    if (sigma_.size() != amb_.dims.size())
        throw std::invalid_argument("MonomialAutomorphism: sigma size mismatch");
    sigma_inv_ = invert_permutation(sigma_);
    if (root_order_ < 1) throw std::invalid_argument("MonomialAutomorphism: root order must be >= 1");
    if (mats_.size() != amb_.dims.size())
        throw std::invalid_argument("MonomialAutomorphism: one matrix per factor required");
    for (unsigned i = 0; i < mats_.size(); ++i) {
        if (amb_.dims[sigma_inv_[i]] != amb_.dims[i])
            throw std::invalid_argument("MonomialAutomorphism: sigma does not preserve dims");
        if (mats_[i].size() != amb_.dims[i] + 1)
            throw std::invalid_argument("MonomialAutomorphism: matrix size mismatch");
        for (unsigned r = 0; r < mats_[i].size(); ++r)
            if (mats_[i].exp(r) >= root_order_)
                throw std::invalid_argument("MonomialAutomorphism: exponent out of range");
    }
    normalize();
}

MonomialAutomorphism MonomialAutomorphism::identity(Ambient amb) {
    amb.validate();
    std::vector<unsigned> sigma(amb.dims.size());
    std::iota(sigma.begin(), sigma.end(), 0u);
    std::vector<GenPermMatrix> mats;
    for (unsigned n : amb.dims) mats.push_back(GenPermMatrix::identity(n + 1));
    return MonomialAutomorphism(std::move(amb), std::move(sigma), 1, std::move(mats));
}

void MonomialAutomorphism::normalize() {
    // Projective normalization: scale each factor matrix so row 0 has exponent 0.
    for (auto& mat : mats_) {
        unsigned long base = mat.exp_[0];
        if (base == 0) continue;
        for (auto& e : mat.exp_) e = static_cast<unsigned>((e + root_order_ - base) % root_order_);
    }
    // Minimal root order: divide out the gcd of the order and all exponents.
    unsigned long g = root_order_;
    for (const auto& mat : mats_)
        for (unsigned e : mat.exp_) g = std::gcd(g, static_cast<unsigned long>(e));
    if (g > 1) {
        root_order_ /= g;
        for (auto& mat : mats_)
            for (auto& e : mat.exp_) e = static_cast<unsigned>(e / g);
    }
}

bool MonomialAutomorphism::is_identity() const {
    for (unsigned i = 0; i < sigma_.size(); ++i)
        if (sigma_[i] != i) return false;
    if (root_order_ != 1) return false;
    for (const auto& mat : mats_)
        for (unsigned r = 0; r < mat.size(); ++r)
            if (mat.col(r) != r || mat.exp(r) != 0) return false;
    return true;
}

std::string MonomialAutomorphism::canonical_key() const {
    std::ostringstream os;
    for (unsigned s : sigma_) os << s << ',';
    os << '|' << root_order_ << '|';
    for (const auto& mat : mats_) {
        for (unsigned r = 0; r < mat.size(); ++r) os << mat.col(r) << ':' << mat.exp(r) << ',';
        os << ';';
    }
    return os.str();
}

bool MonomialAutomorphism::operator==(const MonomialAutomorphism& rhs) const {
    return amb_ == rhs.amb_ && sigma_ == rhs.sigma_ && root_order_ == rhs.root_order_ &&
           mats_ == rhs.mats_;
}

namespace {

GenPermMatrix scale_exponents(const GenPermMatrix& mat, unsigned long factor) {
    std::vector<unsigned> col(mat.size()), exp(mat.size());
    for (unsigned r = 0; r < mat.size(); ++r) {
        col[r] = mat.col(r);
        exp[r] = static_cast<unsigned>(mat.exp(r) * factor);
    }
    return GenPermMatrix(std::move(col), std::move(exp));
}

// C = A * B over a shared root order.
GenPermMatrix matrix_product(const GenPermMatrix& a, const GenPermMatrix& b,
                             unsigned long root_order) {
    std::vector<unsigned> col(a.size()), exp(a.size());
    for (unsigned r = 0; r < a.size(); ++r) {
        col[r] = b.col(a.col(r));
        exp[r] = static_cast<unsigned>((static_cast<unsigned long>(a.exp(r)) + b.exp(a.col(r))) %
                                       root_order);
    }
    return GenPermMatrix(std::move(col), std::move(exp));
}

}  // namespace

MonomialAutomorphism compose(const MonomialAutomorphism& g, const MonomialAutomorphism& h) {
    if (!(g.ambient() == h.ambient()))
        throw std::invalid_argument("compose: ambient mismatch");
    const unsigned m = g.ambient().factors();
    unsigned long order = std::lcm(g.root_order(), h.root_order());
    unsigned long gscale = order / g.root_order();
    unsigned long hscale = order / h.root_order();

    std::vector<unsigned> sigma(m);
    std::vector<GenPermMatrix> mats;
    mats.reserve(m);
    for (unsigned i = 0; i < m; ++i) sigma[i] = g.sigma_of(h.sigma_of(i));
    for (unsigned i = 0; i < m; ++i) {
        GenPermMatrix a = scale_exponents(g.matrix(i), gscale);
        GenPermMatrix b = scale_exponents(h.matrix(g.sigma_inv_of(i)), hscale);
        mats.push_back(matrix_product(a, b, order));
    }
    return MonomialAutomorphism(g.ambient(), std::move(sigma), order, std::move(mats));
}

MonomialAutomorphism inverse(const MonomialAutomorphism& g) {
    const unsigned m = g.ambient().factors();
    std::vector<unsigned> sigma(m);
    std::vector<GenPermMatrix> mats;
    mats.reserve(m);
    for (unsigned i = 0; i < m; ++i) sigma[i] = g.sigma_inv_of(i);
    for (unsigned j = 0; j < m; ++j) {
        const GenPermMatrix& a = g.matrix(g.sigma_of(j));
        std::vector<unsigned> col(a.size()), exp(a.size());
        for (unsigned r = 0; r < a.size(); ++r) {
            col[a.col(r)] = r;
            exp[a.col(r)] = static_cast<unsigned>((g.root_order() - a.exp(r)) % g.root_order());
        }
        mats.emplace_back(std::move(col), std::move(exp));
    }
    return MonomialAutomorphism(g.ambient(), std::move(sigma), g.root_order(), std::move(mats));
}

MonomialAutomorphism power(const MonomialAutomorphism& g, long e) {
    MonomialAutomorphism base = e < 0 ? inverse(g) : g;
    long n = e < 0 ? -e : e;
    MonomialAutomorphism acc = MonomialAutomorphism::identity(g.ambient());
    for (long i = 0; i < n; ++i) acc = compose(acc, base);
    return acc;
}

unsigned order_of(const MonomialAutomorphism& g, unsigned cap) {
    if (cap < 1) throw std::invalid_argument("order_of: cap must be >= 1");
    MonomialAutomorphism acc = g;
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc.is_identity()) return k;
        acc = compose(acc, g);
    }
    throw std::runtime_error("order_of: cap exceeded");
}

std::optional<unsigned> FiniteActionGroup::index_of(const MonomialAutomorphism& g) const {
    for (unsigned i = 0; i < elements.size(); ++i)
        if (elements[i] == g) return i;
    return std::nullopt;
}

FiniteActionGroup generate_group(const std::vector<MonomialAutomorphism>& generators,
                                 unsigned cap) {
    if (generators.empty()) throw std::invalid_argument("generate_group: no generators");
    const Ambient& amb = generators.front().ambient();
    for (const auto& g : generators)
        if (!(g.ambient() == amb)) throw std::invalid_argument("generate_group: ambient mismatch");

    FiniteActionGroup group;
    std::map<std::string, unsigned> index;
    auto add = [&](const MonomialAutomorphism& g) -> bool {
        std::string key = g.canonical_key();
        if (index.count(key)) return false;
        index.emplace(std::move(key), group.elements.size());
        group.elements.push_back(g);
        return true;
    };

    add(MonomialAutomorphism::identity(amb));
    for (size_t next = 0; next < group.elements.size(); ++next) {
        for (const auto& gen : generators) {
            MonomialAutomorphism prod = compose(group.elements[next], gen);
            if (add(prod) && group.elements.size() > cap)
                throw std::runtime_error("generate_group: cap exceeded");
        }
    }

    const unsigned n = group.size();
    group.table.assign(n, std::vector<unsigned>(n, 0));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            auto it = index.find(compose(group.elements[i], group.elements[j]).canonical_key());
            if (it == index.end()) throw std::logic_error("generate_group: closure violated");
            group.table[i][j] = it->second;
        }
    group.inverse.assign(n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (group.table[i][j] == 0) {
                group.inverse[i] = j;
                break;
            }
    return group;
}

namespace {

struct WordTerm {
    std::string symbol;
    long exponent = 1;
};

std::vector<WordTerm> parse_word(const std::string& word) {
    std::vector<WordTerm> terms;
    size_t i = 0;
    const size_t n = word.size();
    while (i < n) {
        char c = word[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
            ++i;
            continue;
        }
        if (c == '1') {
            ++i;
            continue;  // identity literal
        }
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
            throw std::invalid_argument("parse_word: unexpected character '" + std::string(1, c) +
                                        "'");
        size_t start = i;
        while (i < n && (std::isalnum(static_cast<unsigned char>(word[i])) || word[i] == '_')) ++i;
        WordTerm term;
        term.symbol = word.substr(start, i - start);
        if (i < n && word[i] == '^') {
            ++i;
            size_t estart = i;
            if (i < n && (word[i] == '-' || word[i] == '+')) ++i;
            while (i < n && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
            if (estart == i) throw std::invalid_argument("parse_word: missing exponent");
            term.exponent = std::stol(word.substr(estart, i - estart));
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

}  // namespace

MonomialAutomorphism evaluate_word(const Ambient& amb, const NamedGenerators& gens,
                                   const std::string& word) {
    MonomialAutomorphism acc = MonomialAutomorphism::identity(amb);
    for (const WordTerm& term : parse_word(word)) {
        std::vector<std::pair<std::string, long>> expanded;
        auto it = gens.find(term.symbol);
        if (it != gens.end()) {
            expanded.emplace_back(term.symbol, term.exponent);
        } else {
            // A multi-letter token may be a juxtaposition of known single letters,
            // with the exponent binding to the last letter ("gk^-1" = g k^-1).
            for (size_t j = 0; j < term.symbol.size(); ++j) {
                std::string letter(1, term.symbol[j]);
                if (!gens.count(letter))
                    throw std::invalid_argument("evaluate_word: unknown generator '" +
                                                term.symbol + "'");
                expanded.emplace_back(letter, j + 1 == term.symbol.size() ? term.exponent : 1);
            }
        }
        for (const auto& [symbol, exponent] : expanded)
            acc = compose(acc, power(gens.at(symbol), exponent));
    }
    return acc;
}

bool relation_holds(const Ambient& amb, const NamedGenerators& gens, const std::string& relation) {
    size_t eq = relation.find('=');
    if (eq == std::string::npos)
        return evaluate_word(amb, gens, relation).is_identity();
    MonomialAutomorphism lhs = evaluate_word(amb, gens, relation.substr(0, eq));
    MonomialAutomorphism rhs = evaluate_word(amb, gens, relation.substr(eq + 1));
    return lhs == rhs;
}

bool verify_relations(const FiniteActionGroup& group, const NamedGenerators& gens,
                      const std::vector<std::string>& relations) {
    if (group.elements.empty()) throw std::invalid_argument("verify_relations: empty group");
    const Ambient& amb = group.elements.front().ambient();
    for (const auto& [name, g] : gens)
        if (!group.index_of(g))
            throw std::invalid_argument("verify_relations: generator '" + name +
                                        "' is not a group element");
    for (const std::string& rel : relations)
        if (!relation_holds(amb, gens, rel)) return false;
    return true;
}

Integer burnside_count(const FiniteActionGroup& group, const std::vector<Integer>& fix_sizes) {
    if (fix_sizes.size() != group.elements.size())
        throw std::invalid_argument("burnside_count: one fix size per group element required");
    Integer total = 0;
    for (const Integer& f : fix_sizes) {
        if (f < 0) throw std::invalid_argument("burnside_count: fix sizes must be nonnegative");
        total += f;
    }
    Integer order = group.size();
    if (total % order != 0)
        throw std::invalid_argument("burnside_count: non-integral average (inconsistent input)");
    return total / order;
}

std::vector<CoordinatePoint> fixed_coordinate_points(const MonomialAutomorphism& g) {
    const Ambient& amb = g.ambient();
    const unsigned m = amb.factors();
    std::vector<CoordinatePoint> out;
    std::vector<unsigned> coord(m, 0);
    while (true) {
        bool fixed = true;
        for (unsigned i = 0; i < m && fixed; ++i) {
            unsigned source = coord[g.sigma_inv_of(i)];
            if (g.matrix(i).row_of_col(source) != coord[i]) fixed = false;
        }
        if (fixed) out.push_back({coord});
        bool wrapped = true;
        for (unsigned k = m; k-- > 0;) {
            if (++coord[k] <= amb.dims[k]) {
                wrapped = false;
                break;
            }
            coord[k] = 0;
        }
        if (wrapped) return out;
    }
}

}  // namespace cyq
