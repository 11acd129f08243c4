#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qf {

// Raised when a multiplication table fails validation or a group spec
// cannot be parsed. The message names the offending triple/element.
struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite group given by its multiplication table. Element 0 is always the
// identity. Order is capped at kMaxOrder so subgroups fit in a uint64_t mask.
class FiniteGroup {
public:
    static constexpr int kMaxOrder = 64;

    FiniteGroup(std::string name, int n, std::vector<int> table,
                std::vector<std::string> element_names = {});

    int order() const { return n_; }
    double delta() const { return delta_; }
    const std::string& name() const { return name_; }

    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    const std::string& element_name(int g) const { return names_[g]; }

    bool is_abelian() const { return abelian_; }

    // Conjugacy classes, sorted by minimal member; class 0 is {identity}.
    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int class_of(int g) const { return class_of_[g]; }

private:
    std::string name_;
    int n_;
    double delta_;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
    bool abelian_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;

    void validate_and_finish();
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Builtin specs: "Zn" (n >= 1), "S3", "D4", "Q8", and direct products joined
// with 'x' ("Z2xZ4", "S3xZ2"). Anything else is treated as a path to a
// multiplication-table file.
GroupPtr group_from_spec(const std::string& spec);

// Table file format: first line n, then n lines of n whitespace-separated
// 0-based indices; row g, column h holds g*h. Element 0 must be the identity.
GroupPtr group_from_table(std::istream& in, const std::string& name);
GroupPtr group_from_table_file(const std::string& path);

// All subgroups as sorted element lists, ordered by (size, elements).
// Enumerated by closure under BFS over single-element extensions.
std::vector<std::vector<int>> subgroups(const FiniteGroup& g);

// Closure of a generating set (always contains the identity).
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);

// True if the sorted element list is closed under product and inverse.
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h);

}  // namespace qf
