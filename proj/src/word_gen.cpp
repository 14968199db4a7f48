#include "fibword/word_gen.hpp"

#include <omp.h>

#include <utility>

#include "fibword/golden.hpp"

namespace fibword {

std::string to_string(Convention conv) {
    return conv == Convention::concat_rule ? "concat" : "morphism";
}

Convention convention_from_string(std::string_view name) {
    if (name == "concat") return Convention::concat_rule;
    if (name == "morphism") return Convention::morphism_fix;
    throw std::invalid_argument("unknown convention: " + std::string(name));
}

std::uint64_t fib_number(int n) {
    if (n < 0) throw std::invalid_argument("fib_number: negative index");
    if (n > 92)
        throw std::overflow_error("fib_number: index exceeds 64-bit range");
    std::uint64_t a = 1, b = 1;  // F_0, F_1
    for (int i = 0; i < n; ++i) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

namespace {

// Length of the word about to be generated, or a resource error.
std::uint64_t planned_length(int fib_index, std::size_t cap) {
    if (fib_index > 92)
        throw resource_limit_error("requested word length exceeds 64-bit range");
    std::uint64_t len = fib_number(fib_index);
    if (len > cap)
        throw resource_limit_error("requested word of length " +
                                   std::to_string(len) +
                                   " exceeds the cap of " + std::to_string(cap));
    return len;
}

}  // namespace

Word fib_word_concat(int n, std::size_t cap) {
    if (n < 0) throw std::invalid_argument("fib_word_concat: negative index");
    planned_length(n, cap);
    if (n == 0) return Word("0");
    std::string prev = "0", cur = "1";  // f_0, f_1
    for (int i = 2; i <= n; ++i) {
        std::string next;
        next.reserve(cur.size() + prev.size());
        next.append(cur).append(prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Word(std::move(cur));
}

Word fib_word_morphism(int n, std::size_t cap) {
    if (n < 1)
        throw std::invalid_argument("fib_word_morphism: index must be >= 1");
    planned_length(n - 1, cap);
    if (n == 1) return Word("1");
    std::string cur = "0";  // f_2
    for (int i = 3; i <= n; ++i) {
        std::string next;
        next.reserve(static_cast<std::size_t>(fib_number(i - 1)));
        for (char c : cur)
            next.append(c == '0' ? MorphismRule::image_of_zero
                                 : MorphismRule::image_of_one);
        cur = std::move(next);
    }
    return Word(std::move(cur));
}

Word fib_prefix(std::size_t len, Convention conv, std::size_t cap) {
    if (len == 0) return Word();
    if (len > cap)
        throw resource_limit_error("requested prefix of length " +
                                   std::to_string(len) +
                                   " exceeds the cap of " + std::to_string(cap));
    std::string prev, cur;
    if (conv == Convention::concat_rule) {
        // f_0 = "0" is not a prefix of the infinite word; grow from f_1.
        prev = "0";
        cur = "1";
    } else {
        // f_1 = "1" is not a prefix of the fixed point; grow from f_2.
        prev = "1";
        cur = "0";
    }
    while (cur.size() < len) {
        std::string next;
        next.reserve(cur.size() + prev.size());
        next.append(cur).append(prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(len);
    return Word(std::move(cur));
}

Word beatty_prefix_serial(std::size_t len, Convention conv, std::size_t cap) {
    if (len > cap)
        throw resource_limit_error("requested prefix of length " +
                                   std::to_string(len) +
                                   " exceeds the cap of " + std::to_string(cap));
    const bool swap = conv == Convention::morphism_fix;
    std::string out(len, '0');
    for (std::size_t p = 1; p <= len; ++p) {
        bool one = beatty_symbol(p) == Symbol::one;
        out[p - 1] = (one != swap) ? '1' : '0';
    }
    return Word(std::move(out));
}

Word beatty_prefix_parallel(std::size_t len, Convention conv, int threads,
                            std::size_t cap) {
    if (len > cap)
        throw resource_limit_error("requested prefix of length " +
                                   std::to_string(len) +
                                   " exceeds the cap of " + std::to_string(cap));
    const bool swap = conv == Convention::morphism_fix;
    std::string out(len, '0');
    const long long n = static_cast<long long>(len);
#pragma omp parallel for num_threads(threads) schedule(static)
    for (long long p = 1; p <= n; ++p) {
        bool one = beatty_symbol(static_cast<std::uint64_t>(p)) == Symbol::one;
        out[static_cast<std::size_t>(p - 1)] = (one != swap) ? '1' : '0';
    }
    return Word(std::move(out));
}

Word beatty_prefix(std::size_t len, Convention conv, int threads,
                   std::size_t cap) {
    return threads <= 1 ? beatty_prefix_serial(len, conv, cap)
                        : beatty_prefix_parallel(len, conv, threads, cap);
}

}  // namespace fibword
