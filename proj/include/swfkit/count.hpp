#ifndef SWFKIT_COUNT_HPP
#define SWFKIT_COUNT_HPP

#include <mutex>
#include <utility>

#include "swfkit/weak_orders.hpp"

// Exact counts of SWFs over s states and v voters satisfying IIA (q), IIA
// plus the weak Pareto principle (r), and IIA plus citizens' sovereignty (p).
// All arithmetic is arbitrary precision.

namespace swfkit {

namespace detail {

inline BigInt pow_big(BigInt base, BigInt exp) {
    BigInt result = 1;
    while (exp > 0) {
        if (exp % 2 == 1) result *= base;
        base *= base;
        exp /= 2;
    }
    return result;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace detail

// 3^(3^v): every two-state function is transitive and IIA.
inline BigInt count_two_state(int voters) {
    return detail::pow_big(3, detail::pow_big(3, voters));
}

class Counter {
public:
    // Number of IIA SWFs over s states and v voters. For s >= 3 this sums,
    // over cleric class-size compositions (k_1,...,k_m) of s with multinomial
    // multiplicity, the product of per-class option counts h_k(v):
    //   h_1(v) = 1,  h_2(v) = 3^(3^v) - 2,  h_k(v) = 1 + 2*v*q_k(v-1).
    BigInt q(int states, int voters) {
        if (states < 1) throw InputError("q requires at least one state");
        if (voters < 0) throw InputError("q requires a nonnegative voter count");
        if (states == 1) return 1;
        if (states == 2) return count_two_state(voters);
        std::scoped_lock lock(mutex_);
        return q_locked(states, voters);
    }

    // Number of IIA + WPP SWFs: pick a dictator and the function deferred to.
    // With no voters every constant qualifies, matching q_s(0).
    BigInt r(int states, int voters) {
        if (states < 2) throw InputError("r requires at least two states");
        if (voters < 0) throw InputError("r requires a nonnegative voter count");
        if (voters == 0) return q(states, 0);
        return BigInt(voters) * q(states, voters - 1);
    }

    // Number of IIA + CS SWFs: null, or a dictator (either direction) plus
    // the function deferred to.
    BigInt p(int states, int voters) {
        if (states < 2) throw InputError("p requires at least two states");
        if (voters < 0) throw InputError("p requires a nonnegative voter count");
        if (voters == 0) return 1;
        if (states == 2) return count_two_state(voters) - 2;
        return 1 + BigInt(2) * voters * q(states, voters - 1);
    }

    // Option count for one cleric class of the given size.
    BigInt class_options(int size, int voters) {
        if (size == 1 || size == 2) return h_unlocked_small(size, voters);
        std::scoped_lock lock(mutex_);
        return h_locked(size, voters);
    }

private:
    static BigInt h_unlocked_small(int size, int voters) {
        return size == 1 ? BigInt(1) : count_two_state(voters) - 2;
    }

    BigInt q_locked(int states, int voters) {
        if (voters < 0) throw InputError("q requires a nonnegative voter count");
        if (states == 1) return 1;
        if (states == 2) return count_two_state(voters);
        auto key = std::make_pair(states, voters);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt total = 0;
        std::vector<int> sizes;
        sum_compositions(states, voters, sizes, total);
        memo_[key] = total;
        return total;
    }

    BigInt h_locked(int size, int voters) {
        if (size == 1) return 1;
        if (size == 2) return count_two_state(voters) - 2;
        if (voters == 0) return 1;  // no dictator to pick; only the null ruling
        return 1 + BigInt(2) * voters * q_locked(size, voters - 1);
    }

    // Clerics with class sizes (k_1,...,k_m), in order, number
    // s! / (k_1! ... k_m!); each contributes the product of h_{k_i}(v).
    void sum_compositions(int remaining, int voters, std::vector<int>& sizes, BigInt& total) {
        if (remaining == 0) {
            int s = 0;
            for (int k : sizes) s += k;
            BigInt clerics = detail::factorial(s);
            BigInt options = 1;
            for (int k : sizes) {
                clerics /= detail::factorial(k);
                options *= h_locked(k, voters);
            }
            total += clerics * options;
            return;
        }
        for (int k = 1; k <= remaining; ++k) {
            sizes.push_back(k);
            sum_compositions(remaining - k, voters, sizes, total);
            sizes.pop_back();
        }
    }

    std::mutex mutex_;
    std::map<std::pair<int, int>, BigInt> memo_;
};

// Shared memoized counter.
inline Counter& counter() {
    static Counter instance;
    return instance;
}

inline BigInt q(int states, int voters) { return counter().q(states, voters); }
inline BigInt r(int states, int voters) { return counter().r(states, voters); }
inline BigInt p(int states, int voters) { return counter().p(states, voters); }

// Hand-expanded closed forms for s = 3 and s = 4, kept as an independent
// route for cross-checking the composition-based q.
inline BigInt q3_literal(int voters) {
    if (voters == 0) return 13;
    return 6 + 6 * (count_two_state(voters) - 2) + (1 + BigInt(2) * voters * q3_literal(voters - 1));
}

inline BigInt q4_literal(int voters) {
    if (voters == 0) return 75;
    BigInt h2 = count_two_state(voters) - 2;
    return 24 + 36 * h2 + 6 * h2 * h2 + 8 * (1 + BigInt(2) * voters * q3_literal(voters - 1)) +
           (BigInt(2) * voters * q4_literal(voters - 1) + 1);
}

}  // namespace swfkit

#endif  // SWFKIT_COUNT_HPP
