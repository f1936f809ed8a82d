#ifndef CONGKIT_PARTITION_HPP_
#define CONGKIT_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace congkit {

  // An equivalence relation on {0, ..., n - 1}, stored as a restricted growth
  // string: class labels are numbered in order of first appearance, so two
  // partitions are equal iff their label sequences are equal.
  class Partition {
   public:
    Partition() = default;

    // Accepts arbitrary labels and renumbers them canonically.
    explicit Partition(std::vector<std::size_t> const& labels);

    static Partition identity(std::size_t n);
    static Partition universal(std::size_t n);

    std::size_t size() const noexcept {
      return _class_of.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _nr_classes;
    }

    std::size_t class_of(std::size_t x) const {
      return _class_of.at(x);
    }

    bool same_class(std::size_t x, std::size_t y) const {
      return _class_of.at(x) == _class_of.at(y);
    }

    std::vector<std::size_t> const& labels() const noexcept {
      return _class_of;
    }

    // Classes in label order, members ascending.
    std::vector<std::vector<std::size_t>> classes() const;

    bool is_identity() const noexcept {
      return _nr_classes == _class_of.size();
    }

    bool is_universal() const noexcept {
      return _nr_classes <= 1;
    }

    bool operator==(Partition const&) const = default;

    // Canonical order: more classes first (so the identity leads and the
    // universal relation trails), then lexicographic on labels.
    std::strong_ordering operator<=>(Partition const& that) const;

   private:
    std::vector<std::size_t> _class_of;
    std::size_t              _nr_classes = 0;
  };

  // True iff every class of a lies inside a class of b.
  bool refines(Partition const& a, Partition const& b);

  // "{{1,a²},{a,a³}}"
  std::string to_string(Partition const&               p,
                        std::vector<std::string> const& names);

}  // namespace congkit

#endif  // CONGKIT_PARTITION_HPP_
