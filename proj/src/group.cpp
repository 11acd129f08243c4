#include "qfourier/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qf {

FiniteGroup::FiniteGroup(std::string name, int n, std::vector<int> table,
                         std::vector<std::string> element_names)
    : name_(std::move(name)), n_(n), delta_(std::sqrt(static_cast<double>(n))),
      table_(std::move(table)), names_(std::move(element_names)) {
    if (n_ < 1 || n_ > kMaxOrder)
        throw GroupError("group order " + std::to_string(n_) + " outside [1, " +
                         std::to_string(kMaxOrder) + "]");
    if (table_.size() != static_cast<size_t>(n_) * n_)
        throw GroupError("multiplication table has " + std::to_string(table_.size()) +
                         " entries, expected " + std::to_string(n_ * n_));
    if (names_.empty()) {
        names_.reserve(n_);
        for (int i = 0; i < n_; ++i) names_.push_back("g" + std::to_string(i));
    }
    validate_and_finish();
}

void FiniteGroup::validate_and_finish() {
    for (int v : table_)
        if (v < 0 || v >= n_)
            throw GroupError("table entry " + std::to_string(v) + " out of range in " + name_);

    // identity: element 0 must satisfy 0*g = g*0 = g
    for (int g = 0; g < n_; ++g) {
        if (mul(0, g) != g || mul(g, 0) != g)
            throw GroupError("element 0 is not an identity in " + name_ + ": 0*" +
                             std::to_string(g) + "=" + std::to_string(mul(0, g)) + ", " +
                             std::to_string(g) + "*0=" + std::to_string(mul(g, 0)));
    }

    // associativity, reporting the first failing triple
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw GroupError("associativity fails in " + name_ + " at (a,b,c)=(" +
                                     std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + "): (a*b)*c=" +
                                     std::to_string(mul(mul(a, b), c)) + " but a*(b*c)=" +
                                     std::to_string(mul(a, mul(b, c))));

    // two-sided inverses
    inv_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
        for (int h = 0; h < n_; ++h) {
            if (mul(g, h) == 0 && mul(h, g) == 0) {
                inv_[g] = h;
                break;
            }
        }
        if (inv_[g] < 0)
            throw GroupError("element " + std::to_string(g) + " has no two-sided inverse in " +
                             name_);
    }

    abelian_ = true;
    for (int a = 0; a < n_ && abelian_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) {
                abelian_ = false;
                break;
            }

    // conjugacy classes as orbits of g -> h g h^-1
    class_of_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
        if (class_of_[g] >= 0) continue;
        int id = static_cast<int>(classes_.size());
        std::vector<int> cls;
        for (int h = 0; h < n_; ++h) {
            int c = mul(mul(h, g), inv_[h]);
            if (class_of_[c] < 0) {
                class_of_[c] = id;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
}

namespace {

GroupPtr make_cyclic(int n) {
    std::vector<int> t(static_cast<size_t>(n) * n);
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        names[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) t[static_cast<size_t>(i) * n + j] = (i + j) % n;
    }
    return std::make_shared<FiniteGroup>("Z" + std::to_string(n), n, std::move(t),
                                         std::move(names));
}

// S3 as permutations of {1,2,3} in the fixed order
// e, (12), (13), (23), (123), (132); product a*b applies b first, then a.
GroupPtr make_s3() {
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2},  // e
        {1, 0, 2},  // (12)
        {2, 1, 0},  // (13)
        {0, 2, 1},  // (23)
        {1, 2, 0},  // (123): 1->2, 2->3, 3->1
        {2, 0, 1},  // (132)
    }};
    const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    std::vector<int> t(36, -1);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c;
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            for (int k = 0; k < 6; ++k)
                if (perms[k] == c) t[a * 6 + b] = k;
        }
    return std::make_shared<FiniteGroup>("S3", 6, std::move(t), names);
}

// D4 = <r, s | r^4 = s^2 = e, s r s = r^-1>, elements r^i s^j with
// index = i + 4j, i in 0..3, j in 0..1.
GroupPtr make_d4() {
    auto idx = [](int i, int j) { return (i & 3) + 4 * (j & 1); };
    std::vector<int> t(64);
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
                    int i = j1 ? (i1 - i2 + 8) % 4 : (i1 + i2) % 4;
                    t[static_cast<size_t>(idx(i1, j1)) * 8 + idx(i2, j2)] =
                        idx(i, j1 ^ j2);
                }
    std::vector<std::string> names = {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
    return std::make_shared<FiniteGroup>("D4", 8, std::move(t), std::move(names));
}

// Q8 = {1, -1, i, -i, j, -j, k, -k} with the usual quaternion products.
GroupPtr make_q8() {
    // encode q = (sign, axis): axis 0 = 1, 1 = i, 2 = j, 3 = k; index = axis*2 + (sign<0)
    auto idx = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
    // i*j = k, j*k = i, k*i = j; axis table with sign for products of i,j,k
    auto axmul = [](int a, int b, int& sign, int& axis) {
        if (a == 0) { sign = 1; axis = b; return; }
        if (b == 0) { sign = 1; axis = a; return; }
        if (a == b) { sign = -1; axis = 0; return; }
        // distinct imaginary axes: result is the third, sign by cyclic order
        axis = 6 - a - b;  // {1,2,3} \ {a,b}
        bool cyclic = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
        sign = cyclic ? 1 : -1;
    };
    std::vector<int> t(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = (a % 2) ? -1 : 1, xa = a / 2;
            int sb = (b % 2) ? -1 : 1, xb = b / 2;
            int s, x;
            axmul(xa, xb, s, x);
            t[static_cast<size_t>(a) * 8 + b] = idx(sa * sb * s, x);
        }
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return std::make_shared<FiniteGroup>("Q8", 8, std::move(t), std::move(names));
}

GroupPtr make_product(const GroupPtr& a, const GroupPtr& b) {
    int na = a->order(), nb = b->order(), n = na * nb;
    if (n > FiniteGroup::kMaxOrder)
        throw GroupError("product order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(FiniteGroup::kMaxOrder));
    std::vector<int> t(static_cast<size_t>(n) * n);
    std::vector<std::string> names(n);
    auto idx = [nb](int i, int j) { return i * nb + j; };
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1) {
            names[idx(i1, j1)] =
                "(" + a->element_name(i1) + "," + b->element_name(j1) + ")";
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    t[static_cast<size_t>(idx(i1, j1)) * n + idx(i2, j2)] =
                        idx(a->mul(i1, i2), b->mul(j1, j2));
        }
    return std::make_shared<FiniteGroup>(a->name() + "x" + b->name(), n, std::move(t),
                                         std::move(names));
}

GroupPtr builtin_atom(const std::string& tok) {
    if (tok == "S3") return make_s3();
    if (tok == "D4") return make_d4();
    if (tok == "Q8") return make_q8();
    if (tok.size() >= 2 && tok[0] == 'Z') {
        int n = 0;
        for (size_t i = 1; i < tok.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(tok[i]))) return nullptr;
            n = n * 10 + (tok[i] - '0');
        }
        if (n >= 1 && n <= FiniteGroup::kMaxOrder) return make_cyclic(n);
        throw GroupError("cyclic order in \"" + tok + "\" outside [1, 64]");
    }
    return nullptr;
}

}  // namespace

GroupPtr group_from_spec(const std::string& spec) {
    // try builtin grammar first: atoms joined by 'x'
    std::vector<std::string> toks;
    std::string cur;
    for (char c : spec) {
        if (c == 'x') {
            toks.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    toks.push_back(cur);
    std::vector<GroupPtr> parts;
    bool all_builtin = !spec.empty();
    for (const auto& t : toks) {
        GroupPtr p = t.empty() ? nullptr : builtin_atom(t);
        if (!p) {
            all_builtin = false;
            break;
        }
        parts.push_back(p);
    }
    if (all_builtin) {
        GroupPtr g = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) g = make_product(g, parts[i]);
        return g;
    }
    std::ifstream f(spec);
    if (!f)
        throw GroupError("\"" + spec +
                         "\" is neither a builtin spec (Zn, S3, D4, Q8, products with 'x') "
                         "nor a readable table file");
    return group_from_table(f, spec);
}

GroupPtr group_from_table(std::istream& in, const std::string& name) {
    int n;
    if (!(in >> n)) throw GroupError("table " + name + ": missing order line");
    if (n < 1 || n > FiniteGroup::kMaxOrder)
        throw GroupError("table " + name + ": order " + std::to_string(n) +
                         " outside [1, 64]");
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < t.size(); ++i)
        if (!(in >> t[i]))
            throw GroupError("table " + name + ": expected " + std::to_string(n * n) +
                             " entries, got " + std::to_string(i));
    return std::make_shared<FiniteGroup>(name, n, std::move(t));
}

GroupPtr group_from_table_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw GroupError("cannot open table file " + path);
    return group_from_table(f, path);
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    uint64_t mask = 1;  // identity
    std::vector<int> queue = {0};
    auto add = [&](int e) {
        if (!(mask >> e & 1)) {
            mask |= uint64_t{1} << e;
            queue.push_back(e);
        }
    };
    for (int e : gens) {
        if (e < 0 || e >= g.order())
            throw GroupError("generator " + std::to_string(e) + " out of range");
        add(e);
    }
    for (size_t i = 0; i < queue.size(); ++i) {
        int a = queue[i];
        add(g.inv(a));
        for (size_t j = 0; j <= i; ++j) {
            add(g.mul(a, queue[j]));
            add(g.mul(queue[j], a));
        }
    }
    std::vector<int> out;
    for (int e = 0; e < g.order(); ++e)
        if (mask >> e & 1) out.push_back(e);
    return out;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
    if (h.empty()) return false;
    uint64_t mask = 0;
    for (int e : h) {
        if (e < 0 || e >= g.order()) return false;
        mask |= uint64_t{1} << e;
    }
    if (!(mask & 1)) return false;
    for (int a : h)
        for (int b : h)
            if (!(mask >> g.mul(a, b) & 1)) return false;
    for (int a : h)
        if (!(mask >> g.inv(a) & 1)) return false;
    return true;
}

std::vector<std::vector<int>> subgroups(const FiniteGroup& g) {
    int n = g.order();
    std::set<uint64_t> seen;
    std::vector<uint64_t> work;
    auto closure_mask = [&](uint64_t base, int extra) {
        std::vector<int> elems;
        for (int e = 0; e < n; ++e)
            if (base >> e & 1) elems.push_back(e);
        elems.push_back(extra);
        uint64_t m = 0;
        for (int e : subgroup_closure(g, elems)) m |= uint64_t{1} << e;
        return m;
    };
    uint64_t trivial = 1;
    seen.insert(trivial);
    work.push_back(trivial);
    for (size_t i = 0; i < work.size(); ++i) {
        uint64_t h = work[i];
        for (int e = 1; e < n; ++e) {
            if (h >> e & 1) continue;
            uint64_t m = closure_mask(h, e);
            if (seen.insert(m).second) work.push_back(m);
        }
    }
    std::vector<std::vector<int>> out;
    out.reserve(seen.size());
    for (uint64_t m : seen) {
        std::vector<int> elems;
        for (int e = 0; e < n; ++e)
            if (m >> e & 1) elems.push_back(e);
        out.push_back(std::move(elems));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace qf
