#include "pqr/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pqr {

Perm::Perm(unsigned degree) {
    if (degree == 0 || degree > kMaxDegree) throw PreconditionError("permutation degree out of range");
    img_.resize(degree);
    for (unsigned i = 0; i < degree; ++i) img_[i] = static_cast<std::uint16_t>(i);
}

Perm Perm::from_images(std::vector<std::uint16_t> images) {
    const std::size_t n = images.size();
    if (n == 0 || n > kMaxDegree) throw PreconditionError("permutation degree out of range");
    std::vector<bool> seen(n, false);
    for (std::uint16_t v : images) {
        if (v >= n || seen[v]) throw PreconditionError("image vector is not a permutation");
        seen[v] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

bool Perm::is_identity() const {
    for (unsigned i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::operator*(const Perm& b) const {
    if (degree() != b.degree()) throw PreconditionError("degree mismatch in composition");
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[b.img_[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
    return r;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.inverse() * (*this * g); }

Perm Perm::power(std::int64_t e) const {
    Perm base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    Perm acc(degree());
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::uint64_t Perm::order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = img_[j]) { seen[j] = true; ++len; }
        ord = lcm_checked(ord, len);
    }
    return ord;
}

unsigned Perm::ind() const {
    std::vector<bool> seen(img_.size(), false);
    unsigned cycles = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = img_[j]) seen[j] = true;
    }
    return degree() - cycles;
}

std::string Perm::to_cycle_string() const {
    std::vector<bool> seen(img_.size(), false);
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) { seen[i] = true; continue; }
        any = true;
        out << '(';
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            if (!first) out << ',';
            out << (j + 1);
            first = false;
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

Perm Perm::from_cycle_string(const std::string& s, unsigned degree) {
    if (degree == 0 || degree > kMaxDegree) throw PreconditionError("permutation degree out of range");
    std::vector<std::uint16_t> img(degree);
    for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<std::uint16_t>(i);
    std::vector<bool> used(degree, false);

    int line = 1, col = 0;
    std::size_t pos = 0;
    auto advance = [&]() {
        if (s[pos] == '\n') { ++line; col = 0; } else ++col;
        ++pos;
    };
    auto skip_ws = [&]() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
    };

    skip_ws();
    bool saw_cycle = false;
    while (pos < s.size()) {
        if (s[pos] != '(') throw ParseError("expected '('", line, col + 1);
        advance();
        saw_cycle = true;
        std::vector<std::uint16_t> cyc;
        skip_ws();
        while (pos < s.size() && s[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(s[pos])))
                throw ParseError("expected point number", line, col + 1);
            unsigned long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
                if (v > kMaxDegree) throw ParseError("point out of range", line, col + 1);
                advance();
            }
            if (v == 0 || v > degree) throw ParseError("point out of range", line, col + 1);
            std::uint16_t pt = static_cast<std::uint16_t>(v - 1);
            if (used[pt]) throw ParseError("point repeated across cycles", line, col + 1);
            used[pt] = true;
            cyc.push_back(pt);
            skip_ws();
            if (pos < s.size() && (s[pos] == ',')) { advance(); skip_ws(); }
        }
        if (pos >= s.size()) throw ParseError("unterminated cycle", line, col + 1);
        advance();  // ')'
        for (std::size_t i = 0; i < cyc.size(); ++i)
            img[cyc[i]] = cyc[(i + 1) % cyc.size()];
        skip_ws();
    }
    if (!saw_cycle) throw ParseError("empty permutation text", line, col + 1);
    return from_images(std::move(img));
}

std::size_t PermHash::operator()(const Perm& p) const {
    // FNV-1a over the image bytes
    std::size_t h = 14695981039346656037ULL;
    for (std::uint16_t v : p.images()) {
        h = (h ^ (v & 0xff)) * 1099511628211ULL;
        h = (h ^ (v >> 8)) * 1099511628211ULL;
    }
    return h;
}

}  // namespace pqr
