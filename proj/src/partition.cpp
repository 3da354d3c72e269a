#include "schurkit/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace schurkit {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) throw domain_error("partition parts must be non-negative");
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> cols(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_) {
        for (int k = 0; k < p; ++k) cols[static_cast<size_t>(k)] += 1;
    }
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i) {
        if (inner.row(i) > row(i)) return false;
    }
    return true;
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> r;
    for (int p : parts_) r[p] += 1;
    return r;
}

int Partition::multiplicity(int part) const {
    int n = 0;
    for (int p : parts_) {
        if (p == part) ++n;
    }
    return n;
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() > b.parts();
}

int FrobeniusForm::weight() const {
    int w = 0;
    for (size_t i = 0; i < arms.size(); ++i) w += arms[i] + legs[i] + 1;
    return w;
}

FrobeniusForm to_frobenius(const Partition& p) {
    FrobeniusForm f;
    Partition conj = p.conjugate();
    for (int i = 0; p.row(i) > i; ++i) {
        f.arms.push_back(p.row(i) - i - 1);
        f.legs.push_back(conj.row(i) - i - 1);
    }
    return f;
}

Partition from_frobenius(const FrobeniusForm& f) {
    if (f.arms.size() != f.legs.size())
        throw domain_error("Frobenius arms and legs must have equal length");
    int r = f.rank();
    for (int i = 0; i + 1 < r; ++i) {
        if (f.arms[static_cast<size_t>(i)] <= f.arms[static_cast<size_t>(i + 1)] ||
            f.legs[static_cast<size_t>(i)] <= f.legs[static_cast<size_t>(i + 1)])
            throw domain_error("Frobenius arms and legs must be strictly decreasing");
    }
    // Row i of the diagram holds i+1 diagonal-or-left boxes plus the arm; rows
    // below the diagonal block are read off the legs (columns of the conjugate).
    std::vector<int> rows;
    for (int i = 0; i < r; ++i) rows.push_back(f.arms[static_cast<size_t>(i)] + i + 1);
    int depth = r + (r > 0 ? f.legs[0] : 0);
    for (int i = r; i < depth; ++i) {
        int count = 0;
        for (int j = 0; j < r; ++j) {
            if (f.legs[static_cast<size_t>(j)] + j >= i) ++count;
        }
        if (count > 0) rows.push_back(count);
    }
    Partition result{std::vector<int>(rows)};
    if (to_frobenius(result).arms != f.arms || to_frobenius(result).legs != f.legs)
        throw domain_error("invalid Frobenius data");
    return result;
}

Integer z_value(const Partition& p) {
    Integer z = 1;
    for (auto [part, count] : p.multiplicities()) {
        for (int k = 0; k < count; ++k) z *= part;
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(count));
        z *= fact;
    }
    return z;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        stack.push_back(k);
        gen_partitions(remaining - k, k, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw domain_error("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(n, n, stack, out);
    if (n == 0) out = {Partition()};
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int w = 0; w <= n; ++w) {
        auto block = partitions_of(w);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<Partition> subdiagrams(const Partition& p) {
    std::vector<Partition> out;
    std::vector<int> stack;
    // Each recursion level fixes the next row; once a row is zero the rest stay zero.
    std::function<void(int, int)> rec = [&](int row, int prev) {
        if (row == p.length() || prev == 0) {
            out.push_back(Partition(std::vector<int>(stack)));
            return;
        }
        for (int v = std::min(p.row(row), prev); v >= 0; --v) {
            if (v == 0) {
                out.push_back(Partition(std::vector<int>(stack)));
                break;
            }
            stack.push_back(v);
            rec(row + 1, v);
            stack.pop_back();
        }
    };
    rec(0, p.empty() ? 0 : p.row(0));
    std::sort(out.begin(), out.end(), PartitionLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < p.length(); ++i) {
        if (i) os << ',';
        os << p.row(i);
    }
    os << ']';
    return os.str();
}

std::string to_string(const FrobeniusForm& f) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < f.arms.size(); ++i) {
        if (i) os << ',';
        os << f.arms[i];
    }
    os << '|';
    for (size_t i = 0; i < f.legs.size(); ++i) {
        if (i) os << ',';
        os << f.legs[i];
    }
    os << ')';
    return os.str();
}

Partition parse_partition(const std::string& text, bool* canonicalized) {
    if (canonicalized) *canonicalized = false;
    size_t i = 0, n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i < n && text[i] == '0' && text.substr(i) == "0") return Partition();
    if (i >= n || (text[i] != '[' && text[i] != '('))
        throw domain_error("partition must start with '[' or '(': " + text);
    char close = text[i] == '[' ? ']' : ')';
    ++i;
    std::vector<int> parts;
    skip();
    if (i < n && text[i] == close) {
        ++i;
    } else {
        while (true) {
            skip();
            size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw domain_error("expected part in partition: " + text);
            parts.push_back(std::stoi(text.substr(start, i - start)));
            skip();
            if (i < n && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < n && text[i] == close) {
                ++i;
                break;
            }
            throw domain_error("malformed partition: " + text);
        }
    }
    skip();
    if (i != n) throw domain_error("trailing characters after partition: " + text);
    bool sorted = std::is_sorted(parts.begin(), parts.end(), std::greater<int>());
    std::vector<int> nonzero;
    for (int p : parts)
        if (p != 0) nonzero.push_back(p);
    if (canonicalized) *canonicalized = !sorted || nonzero.size() != parts.size();
    return Partition(std::move(parts));
}

Rat rat_from_string(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw domain_error("empty rational literal");
    try {
        Rat q(t);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw domain_error("malformed rational: " + text);
    }
}

}  // namespace schurkit
