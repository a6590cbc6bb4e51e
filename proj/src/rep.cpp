#include "qbrauer/rep.hpp"

#include "qbrauer/errors.hpp"
#include "qbrauer/rmatrix.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace qbrauer {

namespace {

void check_letter(int l, const Letter& x) {
    switch (x.kind) {
        case Letter::Kind::sigma:
        case Letter::Kind::sigma_inv:
        case Letter::Kind::e:
            if (x.index < 1 || x.index > l - 1)
                throw std::out_of_range("generator index " + std::to_string(x.index) + " outside 1.." +
                                        std::to_string(l - 1));
            break;
        case Letter::Kind::tau:
        case Letter::Kind::tau_inv:
            if (l < 4) throw std::out_of_range("tau needs l >= 4");
            break;
    }
}

int parse_index(std::string_view s, std::string_view tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad letter '" + std::string(tok) + "'");
    return v;
}

void check_size(int n, int legs) {
    if (n < 2) throw std::invalid_argument("local dimension n must be at least 2");
    if (n > kMaxLocalDimension) throw GuardError("local dimension n = " + std::to_string(n) + " exceeds guard n <= 6");
    long long dim = 1;
    for (int k = 0; k < legs; ++k) dim *= n;
    if (dim > kMaxRepDimension)
        throw GuardError("space of dimension " + std::to_string(dim) + " exceeds guard " + std::to_string(kMaxRepDimension));
}

}  // namespace

GeneratorWord::GeneratorWord(int l, std::vector<Letter> letters) : l_(l), letters_(std::move(letters)) {
    if (l < 1) throw std::invalid_argument("word size must be positive");
    for (const auto& x : letters_) check_letter(l, x);
}

GeneratorWord GeneratorWord::parse(int l, std::string_view text) {
    std::vector<Letter> letters;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        size_t end = text.find(' ', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        pos = end;
        bool inverse = false;
        std::string_view body = tok;
        if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
            inverse = true;
            body.remove_suffix(3);
        }
        if (body == "tau") {
            letters.push_back({inverse ? Letter::Kind::tau_inv : Letter::Kind::tau, 0});
        } else if (body.size() > 1 && body[0] == 's') {
            letters.push_back({inverse ? Letter::Kind::sigma_inv : Letter::Kind::sigma, parse_index(body.substr(1), tok)});
        } else if (body.size() > 1 && body[0] == 'e' && !inverse) {
            letters.push_back({Letter::Kind::e, parse_index(body.substr(1), tok)});
        } else {
            throw std::invalid_argument("bad letter '" + std::string(tok) + "'");
        }
    }
    return GeneratorWord(l, std::move(letters));
}

std::string GeneratorWord::to_string() const {
    std::string out;
    for (const auto& x : letters_) {
        if (!out.empty()) out += ' ';
        switch (x.kind) {
            case Letter::Kind::sigma: out += "s" + std::to_string(x.index); break;
            case Letter::Kind::sigma_inv: out += "s" + std::to_string(x.index) + "^-1"; break;
            case Letter::Kind::e: out += "e" + std::to_string(x.index); break;
            case Letter::Kind::tau: out += "tau"; break;
            case Letter::Kind::tau_inv: out += "tau^-1"; break;
        }
    }
    return out;
}

GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b) {
    if (a.l_ != b.l_) throw std::invalid_argument("cannot concatenate words of different sizes");
    std::vector<Letter> letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return GeneratorWord(a.l_, std::move(letters));
}

RepContext::RepContext(int n, int l, int z_exponent)
    : n_(n), l_(l), z_exponent_(z_exponent), space_((check_size(n, l), LegSpace(n, std::max(l, 1)))) {
    if (l < 2) throw std::invalid_argument("representation needs l >= 2");
    if (z_exponent < 1) throw std::invalid_argument("z exponent must be positive");
    identity_ = PolyMatrix::identity(space_.dimension());
    const PolyMatrix rcheck = r_check(n);
    const PolyMatrix rcheck_inv = r_check_inv(n);
    for (int i = 1; i <= l - 1; ++i) {
        sigma_.push_back(leg_embed(rcheck, i, i + 1, space_));
        sigma_inv_.push_back(leg_embed(rcheck_inv, i, i + 1, space_));
    }
    e_.resize(static_cast<size_t>(l - 1));
    e_[static_cast<size_t>(l - 2)] = leg_embed(q_operator(n), l - 1, l, space_);
    for (int i = l - 2; i >= 1; --i)
        e_[static_cast<size_t>(i - 1)] = sigma(i + 1) * sigma(i) * e(i + 1) * sigma_inv(i) * sigma_inv(i + 1);
    if (has_tau()) {
        const int k = l - 1;
        tau_ = sigma(k - 1) * sigma(k - 2) * sigma(k) * sigma(k - 1);
        tau_inv_ = sigma_inv(k - 1) * sigma_inv(k) * sigma_inv(k - 2) * sigma_inv(k - 1);
    }
}

const PolyMatrix& RepContext::sigma(int i) const {
    check_letter(l_, {Letter::Kind::sigma, i});
    return sigma_[static_cast<size_t>(i - 1)];
}

const PolyMatrix& RepContext::sigma_inv(int i) const {
    check_letter(l_, {Letter::Kind::sigma_inv, i});
    return sigma_inv_[static_cast<size_t>(i - 1)];
}

const PolyMatrix& RepContext::e(int i) const {
    check_letter(l_, {Letter::Kind::e, i});
    return e_[static_cast<size_t>(i - 1)];
}

const PolyMatrix& RepContext::tau() const {
    check_letter(l_, {Letter::Kind::tau, 0});
    return tau_;
}

const PolyMatrix& RepContext::tau_inv() const {
    check_letter(l_, {Letter::Kind::tau_inv, 0});
    return tau_inv_;
}

LaurentPoly RepContext::loop_value() const { return quantum_integer(z_exponent_); }

const PolyMatrix& rep_generator(const RepContext& ctx, const Letter& letter) {
    switch (letter.kind) {
        case Letter::Kind::sigma: return ctx.sigma(letter.index);
        case Letter::Kind::sigma_inv: return ctx.sigma_inv(letter.index);
        case Letter::Kind::e: return ctx.e(letter.index);
        case Letter::Kind::tau: return ctx.tau();
        case Letter::Kind::tau_inv: return ctx.tau_inv();
    }
    throw std::invalid_argument("unknown letter");
}

PolyMatrix rep_word(const RepContext& ctx, const GeneratorWord& word) {
    if (word.size() != ctx.l()) throw std::invalid_argument("word size does not match representation");
    PolyMatrix out = ctx.identity();
    for (const auto& x : word.letters()) out = out * rep_generator(ctx, x);
    return out;
}

PolyMatrix s_image(const LegSpace& space, int aux_leg, std::span<const int> physical_legs) {
    const int n = space.n();
    const PolyMatrix rp = r_prime(n);
    const PolyMatrix rt = r_tilde(n);
    PolyMatrix out = PolyMatrix::identity(space.dimension());
    for (int leg : physical_legs) out = out * leg_embed(rp, aux_leg, leg, space);
    for (auto it = physical_legs.rbegin(); it != physical_legs.rend(); ++it) out = out * leg_embed(rt, aux_leg, *it, space);
    return out;
}

PolyMatrix rep_S(int n, int l) {
    if (l < 1) throw std::invalid_argument("rep_S needs l >= 1");
    check_size(n, l + 1);
    const LegSpace space(n, l + 1, 0);
    std::vector<int> legs;
    for (int i = 1; i <= l; ++i) legs.push_back(i);
    return s_image(space, 0, legs);
}

std::vector<std::vector<PolyMatrix>> rep_s_blocks(int n, int l) {
    const PolyMatrix s = rep_S(n, l);
    const int m = s.rows() / n;
    std::vector<std::vector<PolyMatrix>> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[static_cast<size_t>(i)].push_back(block(s, m, i, j));
    return out;
}

}  // namespace qbrauer
