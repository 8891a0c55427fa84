#include "hurwitz/partition.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

namespace hurwitz {

namespace {

void check_positive(const std::vector<int>& parts) {
    for (int x : parts) {
        if (x < 1) {
            throw Error("partition parts must be positive, got " + std::to_string(x));
        }
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_positive(parts_);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::without(int value) const {
    std::vector<int> out = parts_;
    auto it = std::find(out.begin(), out.end(), value);
    if (it == out.end()) {
        throw Error("part " + std::to_string(value) + " not in partition " + str());
    }
    out.erase(it);
    return Partition(std::move(out));
}

std::string Partition::str() const {
    if (parts_.empty()) {
        return "-";
    }
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    if (text == "-") {
        return {};
    }
    if (text.empty()) {
        throw ParseError("empty partition text (use '-' for the empty partition)");
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view token = text.substr(pos, comma - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
            throw ParseError("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition concat(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.begin(), b.end());
    return Partition(std::move(parts));
}

Partition doubled(const Partition& p) {
    std::vector<int> parts;
    for (int x : p) {
        parts.push_back(2 * x);
    }
    return Partition(std::move(parts));
}

Partition squared(const Partition& p) {
    std::vector<int> parts;
    for (int x : p) {
        parts.push_back(x);
        parts.push_back(x);
    }
    return Partition(std::move(parts));
}

Partition pad_ones(const Partition& p, int m) {
    std::vector<int> parts = p.parts();
    parts.insert(parts.end(), static_cast<std::size_t>(2 * m), 1);
    return Partition(std::move(parts));
}

Partition pad_twos(const Partition& p, int m) {
    std::vector<int> parts = p.parts();
    parts.insert(parts.end(), static_cast<std::size_t>(m), 2);
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

TailDecomposition tail_decomposition(const Partition& p) {
    std::map<int, int> counts;
    for (int x : p) {
        ++counts[x];
    }
    std::vector<int> two_e, two_o, oo, zero;
    for (const auto& [value, count] : counts) {
        if (value % 2 == 0) {
            const int half = value / 2;
            auto& target = (half % 2 == 0) ? two_e : two_o;
            target.insert(target.end(), static_cast<std::size_t>(count), half);
        } else {
            oo.insert(oo.end(), static_cast<std::size_t>(count / 2), value);
            if (count % 2 == 1) {
                zero.push_back(value);
            }
        }
    }
    return {Partition(std::move(two_e)), Partition(std::move(two_o)), Partition(std::move(oo)),
            Partition(std::move(zero))};
}

Partition recombine(const TailDecomposition& t) {
    return concat(concat(doubled(t.two_e), doubled(t.two_o)), concat(squared(t.oo), t.zero));
}

int simple_branch_count(const Partition& lambda, const Partition& mu, int genus) {
    if (lambda.weight() != mu.weight()) {
        throw WeightMismatch("|lambda| = " + std::to_string(lambda.weight()) + " but |mu| = " +
                             std::to_string(mu.weight()));
    }
    return lambda.length() + mu.length() + 2 * genus - 2;
}

bool excluded_configuration(const Partition& lambda, const Partition& mu, int genus) {
    if (simple_branch_count(lambda, mu, genus) <= 0) {
        return true;
    }
    const int d = lambda.weight();
    if (d % 2 != 0) {
        return false;
    }
    const int k = d / 2;
    auto special = [&](const Partition& p) { return p == Partition{2 * k} || p == Partition{k, k}; };
    return special(lambda) && special(mu);
}

void require_admissible(const Partition& lambda, const Partition& mu, int genus) {
    if (genus < 0) {
        throw Error("genus must be non-negative");
    }
    if (excluded_configuration(lambda, mu, genus)) {
        throw ExcludedConfiguration("excluded configuration: g=" + std::to_string(genus) +
                                    ", lambda=" + lambda.str() + ", mu=" + mu.str());
    }
}

}  // namespace hurwitz
