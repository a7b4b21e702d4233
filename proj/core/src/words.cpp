#include "rauzy4/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rauzy4 {

namespace {

void require_binary(const std::vector<int>& digits) {
    for (int d : digits)
        if (d != 0 && d != 1)
            throw std::invalid_argument("digits must be 0 or 1");
}

std::vector<int> parse_digit_run(const std::string& text) {
    std::vector<int> out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("digit run must be over {0,1}: " + text);
        out.push_back(ch - '0');
    }
    return out;
}

std::string digit_run(const std::vector<int>& digits) {
    std::string s;
    s.reserve(digits.size());
    for (int d : digits) s.push_back(static_cast<char>('0' + d));
    return s;
}

}  // namespace

int EventuallyPeriodicWord::digit_at(int i) const {
    if (i < start_index) return 0;
    std::size_t off = static_cast<std::size_t>(i - start_index);
    if (off < preperiod.size()) return preperiod[off];
    off -= preperiod.size();
    return period[off % period.size()];
}

bool is_admissible(const std::vector<int>& digits) {
    require_binary(digits);
    int run = 0;
    for (int d : digits) {
        run = d == 1 ? run + 1 : 0;
        if (run >= 4) return false;
    }
    return true;
}

bool is_admissible(const DigitString& w) { return is_admissible(w.digits); }

bool is_admissible(const EventuallyPeriodicWord& w) {
    if (w.period.empty())
        throw std::invalid_argument("period must be nonempty");
    // Preperiod plus two periods covers every length-4 window of the
    // infinite unrolling, including the junction and the wrap.
    std::vector<int> unrolled = w.preperiod;
    for (int rep = 0; rep < 2; ++rep)
        unrolled.insert(unrolled.end(), w.period.begin(), w.period.end());
    if (w.period.size() < 4)  // short periods need more wraps to expose runs
        for (int rep = 0; rep < 4; ++rep)
            unrolled.insert(unrolled.end(), w.period.begin(), w.period.end());
    return is_admissible(unrolled);
}

EventuallyPeriodicWord canonicalize(const EventuallyPeriodicWord& w) {
    EventuallyPeriodicWord c = w;
    if (c.period.empty())
        throw std::invalid_argument("period must be nonempty");
    // Primitive period.
    for (std::size_t d = 1; d < c.period.size(); ++d) {
        if (c.period.size() % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < c.period.size() && repeats; ++i)
            repeats = c.period[i] == c.period[i % d];
        if (repeats) {
            c.period.resize(d);
            break;
        }
    }
    // Minimal preperiod: a trailing preperiod digit equal to the last
    // period digit can be absorbed by rotating the period.
    while (!c.preperiod.empty() && c.preperiod.back() == c.period.back()) {
        c.preperiod.pop_back();
        std::rotate(c.period.rbegin(), c.period.rbegin() + 1, c.period.rend());
    }
    // Strip leading zero preperiod digits (value-preserving).
    while (!c.preperiod.empty() && c.preperiod.front() == 0) {
        c.preperiod.erase(c.preperiod.begin());
        ++c.start_index;
    }
    bool zero_period = std::all_of(c.period.begin(), c.period.end(),
                                   [](int d) { return d == 0; });
    if (zero_period) {
        c.period = {0};
        if (c.preperiod.empty()) c.start_index = 0;
    }
    return c;
}

bool lex_less(const DigitString& u, const DigitString& v) {
    int u_lo = u.start_index - static_cast<int>(u.digits.size()) + 1;
    int v_lo = v.start_index - static_cast<int>(v.digits.size()) + 1;
    int hi = std::max(u.start_index, v.start_index);
    int lo = std::min(u_lo, v_lo);
    auto at = [](const DigitString& w, int i) {
        int off = w.start_index - i;
        if (off < 0 || off >= static_cast<int>(w.digits.size())) return 0;
        return w.digits[static_cast<std::size_t>(off)];
    };
    for (int i = hi; i >= lo; --i) {
        int a = at(u, i), b = at(v, i);
        if (a != b) return a < b;
    }
    return false;
}

std::vector<DigitString> enumerate_admissible(int depth, int start_index) {
    if (depth < 1)
        throw std::invalid_argument("depth must be >= 1");
    std::vector<DigitString> out;
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(depth));
    auto rec = [&](auto&& self, int run) -> void {
        if (static_cast<int>(cur.size()) == depth) {
            out.push_back(DigitString{start_index, cur});
            return;
        }
        cur.push_back(0);
        self(self, 0);
        cur.back() = 1;
        if (run < 3) self(self, run + 1);
        cur.pop_back();
    };
    rec(rec, 0);
    return out;
}

std::uint64_t count_admissible(int depth) {
    if (depth < 1)
        throw std::invalid_argument("depth must be >= 1");
    // Count words ending with a run of exactly r ones, r = 0..3.
    std::uint64_t run[4] = {1, 1, 0, 0};
    for (int i = 1; i < depth; ++i) {
        std::uint64_t total = run[0] + run[1] + run[2] + run[3];
        std::uint64_t next[4] = {total, run[0], run[1], run[2]};
        std::copy(next, next + 4, run);
    }
    return run[0] + run[1] + run[2] + run[3];
}

ValueEnclosure alpha_power_value(int i, const RootData& roots) {
    ZAlphaInt p = alpha_pow(i);
    return {eval_beta2(p, roots), eval_beta3(p, roots)};
}

ValueEnclosure value_alpha_enclosure(const EventuallyPeriodicWord& w, const RootData& roots) {
    if (!is_admissible(w))
        throw std::invalid_argument("word is not admissible");
    mpfr_prec_t prec = roots.beta2.precision();
    Interval zero = Interval::from_int(0, prec);
    ValueEnclosure acc{zero, {zero, zero}};
    int i = w.start_index;
    for (int d : w.preperiod) {
        if (d) {
            ValueEnclosure p = alpha_power_value(i, roots);
            acc.r = acc.r + p.r;
            acc.z = acc.z + p.z;
        }
        ++i;
    }
    // Periodic tail t / (1 - alpha^p) with t the first period instance.
    ValueEnclosure t{zero, {zero, zero}};
    int j = i;
    bool any = false;
    for (int d : w.period) {
        if (d) {
            ValueEnclosure p = alpha_power_value(j, roots);
            t.r = t.r + p.r;
            t.z = t.z + p.z;
            any = true;
        }
        ++j;
    }
    if (any) {
        int p = static_cast<int>(w.period.size());
        ValueEnclosure ap = alpha_power_value(p, roots);
        Interval one = Interval::from_int(1, prec);
        Interval den_r = one - ap.r;
        acc.r = acc.r + t.r / den_r;
        // Complex division by (1 - alpha^p) at beta3.
        Interval dre = one - ap.z.re;
        Interval dim = -ap.z.im;
        Interval norm = dre.square() + dim.square();
        Interval zre = (t.z.re * dre + t.z.im * dim) / norm;
        Interval zim = (t.z.im * dre - t.z.re * dim) / norm;
        acc.z = acc.z + ComplexInterval{zre, zim};
    }
    return acc;
}

EmbeddedPoint value_alpha(const EventuallyPeriodicWord& w, const RootData& roots) {
    ValueEnclosure v = value_alpha_enclosure(w, roots);
    return {v.r.midpoint(), v.z.re.midpoint(), v.z.im.midpoint()};
}

std::string format_digit_string(const DigitString& w) {
    std::ostringstream os;
    os << "index=" << w.start_index << '\n' << digit_run(w.digits) << '\n';
    return os.str();
}

DigitString parse_digit_string(const std::string& text) {
    std::istringstream is(text);
    std::string header, run;
    if (!std::getline(is, header) || header.rfind("index=", 0) != 0)
        throw std::invalid_argument("expected 'index=<k>' header");
    DigitString w;
    w.start_index = std::stoi(header.substr(6));
    if (!std::getline(is, run))
        throw std::invalid_argument("expected digit line after header");
    w.digits = parse_digit_run(run);
    return w;
}

std::string format_word(const EventuallyPeriodicWord& w) {
    std::ostringstream os;
    os << "index=" << w.start_index << " pre=" << digit_run(w.preperiod)
       << " per=" << digit_run(w.period);
    return os.str();
}

EventuallyPeriodicWord parse_word(const std::string& text) {
    std::istringstream is(text);
    std::string f1, f2, f3;
    if (!(is >> f1 >> f2 >> f3) || f1.rfind("index=", 0) != 0 ||
        f2.rfind("pre=", 0) != 0 || f3.rfind("per=", 0) != 0)
        throw std::invalid_argument("expected 'index=<l> pre=<word> per=<word>': " + text);
    EventuallyPeriodicWord w;
    w.start_index = std::stoi(f1.substr(6));
    w.preperiod = parse_digit_run(f2.substr(4));
    w.period = parse_digit_run(f3.substr(4));
    if (w.period.empty())
        throw std::invalid_argument("period must be nonempty: " + text);
    return w;
}

}  // namespace rauzy4
