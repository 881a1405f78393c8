#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "sdskit/compress.hpp"

namespace sdskit {

// Orbit group of a cyclic word: shifts; shifts + reversal; shifts + reversal
// + index multiplication by every unit mod the length.
enum class EquivMode { Necklace, Bracelet, Charmed };

// Lexicographically smallest sequence in the orbit of `a` under the mode's
// group. Idempotent; two sequences are equivalent iff canonicals are equal.
Sequence orbit_canonical(const Sequence& a, EquivMode mode);

// Streams call the visitor once per equivalence class, with the class's
// canonical representative. Return false from the visitor to stop.
using SequenceVisitor = std::function<bool(const Sequence&)>;

void necklaces(const Content& content, const SequenceVisitor& visit);
void bracelets(const Content& content, const SequenceVisitor& visit);
void charmed_bracelets(const Content& content, const SequenceVisitor& visit);

std::vector<Sequence> collect_classes(const Content& content, EquivMode mode);

// Full-space class stream for heavy scans. With jobs > 1 the visitor is
// invoked concurrently from `jobs` workers (worker index given); each class
// is delivered exactly once, in no particular order.
void for_each_class(const Content& content, EquivMode mode, int jobs,
                    const std::function<void(std::span<const Value>, unsigned worker)>& visit);

std::uint64_t count_classes(const Content& content, EquivMode mode, int jobs = 1);

} // namespace sdskit
