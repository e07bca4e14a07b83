#include "epf/partition.hh"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace epf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> t;
    if (parts_.empty()) return Partition(t);
    t.resize(static_cast<size_t>(parts_[0]));
    for (int p : parts_)
        for (int i = 0; i < p; ++i) t[static_cast<size_t>(i)]++;
    return Partition(std::move(t));
}

Partition Partition::drop_one_part_1() const {
    if (!has_part_1())
        throw std::invalid_argument("drop_one_part_1: no part equal to 1");
    std::vector<int> p(parts_.begin(), parts_.end() - 1);
    return Partition(std::move(p));
}

std::string Partition::key() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << '+';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::from_key(const std::string& key) {
    if (key == "0" || key.empty()) return Partition();
    std::vector<int> parts;
    std::istringstream is(key);
    std::string tok;
    while (std::getline(is, tok, '+')) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending-lex emission: largest first part first.
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Int z_of(const Partition& lambda) {
    Int z = 1;
    const auto& parts = lambda.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        unsigned long mult = static_cast<unsigned long>(j - i);
        z *= int_pow(Int(parts[i]), mult);
        Int f;
        mpz_fac_ui(f.get_mpz_t(), mult);
        z *= f;
        i = j;
    }
    return z;
}

int gcd_of_partition(const Partition& lambda) {
    int g = 0;
    for (int p : lambda.parts()) g = std::gcd(g, p);
    return g;
}

Int b_stat(const Partition& lambda) {
    Int b = 0;
    for (int p : lambda.parts()) b += Int(p) * (p - 1) / 2;
    return b;
}

}  // namespace epf
