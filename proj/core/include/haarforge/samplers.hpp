// Copyright 2026 The haar-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <string_view>
#include <thread>
#include <type_traits>
#include <vector>

#include "haarforge/euler.hpp"
#include "haarforge/matrix.hpp"
#include "haarforge/random.hpp"

namespace haarforge {

enum class Group { so, o, u, sp, sn };

/// A group tag and its dimension parameter; Sp carries N for matrices of
/// size 2N.
struct GroupId {
  Group tag = Group::so;
  std::size_t n = 1;
};

enum class Method { euler, qr, householder, hessenberg, cmv, bubble };

std::string_view to_string(Group g) noexcept;
std::string_view to_string(Method m) noexcept;

/// Bubble-sort decision bits and the permutation they produce.
///
/// bits[j(j-1)/2 + i-1] = mu_{i,j} for 1 <= i <= j <= N-1. T_i(mu) swaps
/// coordinates i and i+1 when mu = 1, E_j = T_j(mu_{j,j}) ... T_1(mu_{1,j}),
/// and P = E_1 ... E_{N-1}. sigma is one-line notation on {1..N} with
/// P e_j = e_{sigma(j)}.
struct PermutationWord {
  std::size_t n = 0;
  std::vector<std::uint8_t> bits;
  std::vector<std::size_t> sigma;

  std::size_t fixed_points() const noexcept;
};

constexpr std::size_t permutation_bit_index(std::size_t i, std::size_t j) noexcept {
  return j * (j - 1) / 2 + (i - 1);
}

PermutationWord permutation_from_bits(std::size_t n, std::vector<std::uint8_t> bits);
SquareMatrix permutation_matrix(const PermutationWord& word);

EulerAnglesSO random_angles_so(RandomStream& s, std::size_t n);
EulerAnglesU random_angles_u(RandomStream& s, std::size_t n);
EulerAnglesSp random_angles_sp(RandomStream& s, std::size_t n);

SquareMatrix haar_so_euler(RandomStream& s, std::size_t n);
/// SO(N) sample times diag(-1, 1, ..., 1) on a fair coin.
SquareMatrix haar_o_euler(RandomStream& s, std::size_t n);
SquareMatrix haar_u_euler(RandomStream& s, std::size_t n);
SquareMatrix haar_sp_euler(RandomStream& s, std::size_t n);

/// Gram-Schmidt (with one reorthogonalisation pass) on a Gaussian matrix,
/// so R has a positive diagonal. Accepts O(N), U(N), and SO(N) by
/// rejection on det = -1.
SquareMatrix haar_qr(RandomStream& s, const GroupId& group);

/// X = E_{N-1} ... E_1 E_0 with E_{N-j} = diag(H_{N+1-j}, I_{j-1}) and
/// H = -e^{i theta} (I - 2 w w^dagger), which sends the last local basis
/// vector to a uniform unit vector z; E_0 is a random phase (sign). SO(N)
/// by rejection on det = -1.
SquareMatrix haar_householder(RandomStream& s, const GroupId& group);

PermutationWord sample_permutation(RandomStream& s, std::size_t n);

/// S = U^T U with U Haar on U(N).
SquareMatrix coe_sample(RandomStream& s, std::size_t n);
/// S = Z^{-1} U^T Z U with U Haar on U(2N).
SquareMatrix cse_sample(RandomStream& s, std::size_t n);

/// Dense group element for a (group, method) pair. Throws DomainError for
/// combinations without a sampler.
SquareMatrix sample_group(RandomStream& s, const GroupId& group, Method method);

/// Runs `fn(stream)` for `count` indices. Lane l owns RandomStream(seed, l)
/// and handles the indices i with i % streams == l in increasing order, so
/// the result depends only on (seed, streams). Lanes run on separate threads.
template <class Fn>
auto sample_batch(std::size_t count, std::uint64_t seed, std::size_t streams, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, RandomStream&>> {
  using Result = std::invoke_result_t<Fn&, RandomStream&>;
  std::vector<Result> out(count);
  streams = std::max<std::size_t>(1, std::min(streams, std::max<std::size_t>(count, 1)));
  std::vector<std::exception_ptr> errors(streams);
  auto lane = [&](std::size_t l) {
    try {
      RandomStream rs(seed, l);
      for (std::size_t i = l; i < count; i += streams) out[i] = fn(rs);
    } catch (...) {
      errors[l] = std::current_exception();
    }
  };
  if (streams == 1) {
    lane(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(streams);
    for (std::size_t l = 0; l < streams; ++l) workers.emplace_back(lane, l);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace haarforge
