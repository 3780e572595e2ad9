#pragma once

#include <array>

namespace duporcq {

// Quaternion w + x i + y j + z k over any commutative scalar ring.
template <class T>
struct Quaternion {
  T w{}, x{}, y{}, z{};

  static Quaternion pure(const T& a, const T& b, const T& c) { return {T(0), a, b, c}; }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  T norm2() const { return w * w + x * x + y * y + z * z; }
  std::array<T, 3> vec() const { return {x, y, z}; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend Quaternion operator*(const T& s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
};

}  // namespace duporcq
