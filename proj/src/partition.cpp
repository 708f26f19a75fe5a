#include "stratavol/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "stratavol/errors.hpp"

namespace stratavol {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0)
            throw DomainError("partition parts must be positive, got " + std::to_string(p));
        weight_ += p;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

bool Partition::contains(int part) const {
    return std::find(parts_.begin(), parts_.end(), part) != parts_.end();
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

int Partition::min_part() const {
    if (parts_.empty())
        throw DomainError("min_part of empty partition");
    return parts_.back();
}

int Partition::max_part() const {
    if (parts_.empty())
        throw DomainError("max_part of empty partition");
    return parts_.front();
}

Rational Partition::aut_order() const {
    Rational order = 1;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        order *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return order;
}

Partition Partition::with_part(int part) const {
    std::vector<int> v = parts_;
    v.push_back(part);
    return Partition(std::move(v));
}

Partition Partition::without_part(int part) const {
    std::vector<int> v = parts_;
    auto it = std::find(v.begin(), v.end(), part);
    if (it == v.end())
        throw DomainError("without_part: " + std::to_string(part) + " not in " + to_string());
    v.erase(it);
    return Partition(std::move(v));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> v = parts_;
    v.insert(v.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(v));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (weight_ != other.weight_)
        return weight_ <=> other.weight_;
    // Same weight: larger leading parts come first, so compare part lists
    // lexicographically with the usual int order reversed.
    const auto& a = parts_;
    const auto& b = other.parts_;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i])
            return b[i] <=> a[i];
    }
    return a.size() <=> b.size();
}

namespace {

// Descending-part partitions of exact weight w with every part in
// [min_part, max_part], emitted with larger first parts first.
void emit_exact(int w, int max_part, int min_part, std::vector<int>& stack,
                std::vector<Partition>& out) {
    if (w == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int p = std::min(w, max_part); p >= min_part; --p) {
        stack.push_back(p);
        emit_exact(w - p, p, min_part, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_up_to(int weight_cap, int min_part) {
    if (min_part <= 0)
        throw DomainError("partitions_up_to: min_part must be positive");
    if (weight_cap < 0)
        throw DomainError("partitions_up_to: negative weight cap");
    std::vector<Partition> out;
    out.push_back(Partition::empty());
    std::vector<int> stack;
    for (int w = 1; w <= weight_cap; ++w)
        emit_exact(w, w, min_part, stack, out);
    return out;
}

} // namespace stratavol
