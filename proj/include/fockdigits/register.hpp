#ifndef FOCKDIGITS_REGISTER_HPP
#define FOCKDIGITS_REGISTER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fockdigits/error.hpp"

namespace fockdigits {

// Natural numbers and Fock basis indices share one exact integer type.
using Natural = std::uint64_t;
using FockIndex = Natural;
using Digit = std::uint32_t;

// Checked machine arithmetic; this module never touches floating point.
inline Natural checked_add(Natural a, Natural b) {
  Natural r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "addition exceeds 64-bit range");
  }
  return r;
}

inline Natural checked_mul(Natural a, Natural b) {
  Natural r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "multiplication exceeds 64-bit range");
  }
  return r;
}

inline Natural checked_pow(Natural base, std::size_t exponent) {
  Natural r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    r = checked_mul(r, base);
  }
  return r;
}

enum class RegisterMode { Finite, TruncatedInfinite };

// A base-b register: either a finite q-slot one of capacity b^q - 1, or a
// truncated stand-in for the infinite register, whose top guard slots must
// stay empty throughout any computation.
class RegisterSpec {
 public:
  static RegisterSpec finite(Natural base, std::size_t slot_count) {
    if (base < 2) {
      throw Error(ErrorKind::OutOfRange, "base must be >= 2");
    }
    if (slot_count < 1) {
      throw Error(ErrorKind::OutOfRange, "finite register needs >= 1 slot");
    }
    return RegisterSpec(base, slot_count, RegisterMode::Finite, 0);
  }

  static RegisterSpec truncated_infinite(Natural base, std::size_t trunc_slots,
                                         std::size_t guard_slots = 2) {
    if (base < 2) {
      throw Error(ErrorKind::OutOfRange, "base must be >= 2");
    }
    if (trunc_slots < 2) {
      throw Error(ErrorKind::OutOfRange,
                  "truncated-infinite register needs >= 2 slots");
    }
    if (guard_slots < 1 || guard_slots >= trunc_slots) {
      throw Error(ErrorKind::OutOfRange,
                  "guard slots must satisfy 1 <= g < trunc_slots");
    }
    return RegisterSpec(base, trunc_slots, RegisterMode::TruncatedInfinite,
                        guard_slots);
  }

  Natural base() const { return m_base; }
  std::size_t slots() const { return m_slots; }
  RegisterMode mode() const { return m_mode; }
  bool is_finite() const { return m_mode == RegisterMode::Finite; }
  std::size_t guard_slots() const { return m_guard; }
  Natural max_digit() const { return m_base - 1; }

  // N = b^q - 1 in both modes.
  Natural capacity() const { return checked_pow(m_base, m_slots) - 1; }

  Natural dim() const { return checked_pow(m_base, m_slots); }

  // Largest value whose digits avoid the guard slots. Equals capacity()
  // for finite registers.
  Natural usable_capacity() const {
    return checked_pow(m_base, m_slots - m_guard) - 1;
  }

  // First slot index belonging to the guard region (slots() if none).
  std::size_t guard_start() const { return m_slots - m_guard; }

  // Validates that |n> is representable, and for truncated-infinite
  // registers that it does not occupy the guard slots.
  void check_state(Natural n) const {
    if (n > capacity()) {
      throw Error(ErrorKind::OutOfRange,
                  "state index " + std::to_string(n) + " exceeds capacity " +
                      std::to_string(capacity()));
    }
    if (m_mode == RegisterMode::TruncatedInfinite && n > usable_capacity()) {
      throw Error(ErrorKind::GuardViolation,
                  "state index " + std::to_string(n) +
                      " occupies a guard slot (usable capacity " +
                      std::to_string(usable_capacity()) + ")");
    }
  }

  bool operator==(const RegisterSpec& other) const = default;

 private:
  RegisterSpec(Natural base, std::size_t slots, RegisterMode mode,
               std::size_t guard)
      : m_base(base), m_slots(slots), m_mode(mode), m_guard(guard) {}

  Natural m_base;
  std::size_t m_slots;
  RegisterMode m_mode;
  std::size_t m_guard;
};

// Little-endian digit list: digits()[l] multiplies b^l.
class DigitVector {
 public:
  DigitVector(Natural base, std::vector<Digit> digits)
      : m_base(base), m_digits(std::move(digits)) {
    if (base < 2) {
      throw Error(ErrorKind::OutOfRange, "base must be >= 2");
    }
    for (Digit d : m_digits) {
      if (d >= base) {
        throw Error(ErrorKind::InvalidDigit,
                    "digit " + std::to_string(d) + " not below base " +
                        std::to_string(base));
      }
    }
  }

  Natural base() const { return m_base; }
  const std::vector<Digit>& digits() const { return m_digits; }
  std::size_t size() const { return m_digits.size(); }
  Digit at(std::size_t l) const { return l < m_digits.size() ? m_digits[l] : 0; }

  bool operator==(const DigitVector& other) const = default;

 private:
  Natural m_base;
  std::vector<Digit> m_digits;
};

// q = floor(log_b n) + 1, found by integer comparison against powers of b.
// By convention n = 0 takes a single zero digit.
inline std::size_t slot_count_for(Natural n, Natural b) {
  if (b < 2) {
    throw Error(ErrorKind::OutOfRange, "base must be >= 2");
  }
  if (n == 0) {
    return 1;
  }
  std::size_t q = 1;
  Natural power = b;  // b^q
  while (power <= n) {
    power = checked_mul(power, b);
    ++q;
  }
  return q;
}

inline Natural capacity(const RegisterSpec& spec) { return spec.capacity(); }

namespace detail {

inline std::vector<Digit> digits_of(Natural n, Natural b, std::size_t width) {
  std::vector<Digit> out(width, 0);
  for (std::size_t l = 0; l < width && n != 0; ++l) {
    out[l] = static_cast<Digit>(n % b);
    n /= b;
  }
  return out;
}

}  // namespace detail

// Digits of n zero-padded to the full register width. Truncated-infinite
// registers refuse values that would occupy their guard slots.
inline DigitVector encode_digits(Natural n, const RegisterSpec& spec) {
  if (n > spec.capacity()) {
    throw Error(ErrorKind::OutOfRange,
                std::to_string(n) + " exceeds register capacity " +
                    std::to_string(spec.capacity()));
  }
  spec.check_state(n);
  return DigitVector(spec.base(), detail::digits_of(n, spec.base(), spec.slots()));
}

// Digits of n at its natural width slot_count_for(n, b).
inline DigitVector encode_digits(Natural n, Natural b) {
  return DigitVector(b, detail::digits_of(n, b, slot_count_for(n, b)));
}

inline Natural decode_digits(const DigitVector& d) {
  // Horner from the top digit down, so leading zero padding costs nothing
  // and overflow fires only when the value itself does.
  Natural value = 0;
  for (std::size_t l = d.size(); l-- > 0;) {
    value = checked_add(checked_mul(value, d.base()), d.digits()[l]);
  }
  return value;
}

}  // namespace fockdigits

#endif  // FOCKDIGITS_REGISTER_HPP
