#include "congkit/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "congkit/errors.hpp"

namespace congkit {

  Partition::Partition(std::vector<std::size_t> const& labels)
      : _class_of(labels.size()) {
    std::unordered_map<std::size_t, std::size_t> relabel;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, inserted] = relabel.try_emplace(labels[i], relabel.size());
      _class_of[i]        = it->second;
    }
    _nr_classes = relabel.size();
  }

  Partition Partition::identity(std::size_t n) {
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = i;
    }
    return Partition(labels);
  }

  Partition Partition::universal(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
  }

  std::vector<std::vector<std::size_t>> Partition::classes() const {
    std::vector<std::vector<std::size_t>> result(_nr_classes);
    for (std::size_t i = 0; i < _class_of.size(); ++i) {
      result[_class_of[i]].push_back(i);
    }
    return result;
  }

  std::strong_ordering Partition::operator<=>(Partition const& that) const {
    if (_nr_classes != that._nr_classes) {
      return that._nr_classes <=> _nr_classes;
    }
    return _class_of <=> that._class_of;
  }

  bool refines(Partition const& a, Partition const& b) {
    if (a.size() != b.size()) {
      throw Error(ErrorKind::carrier_mismatch,
                  "partitions on " + std::to_string(a.size()) + " and "
                      + std::to_string(b.size()) + " points");
    }
    std::vector<std::size_t> image(a.number_of_classes(), b.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      auto& target = image[a.class_of(x)];
      if (target == b.size()) {
        target = b.class_of(x);
      } else if (target != b.class_of(x)) {
        return false;
      }
    }
    return true;
  }

  std::string to_string(Partition const&               p,
                        std::vector<std::string> const& names) {
    std::string out = "{";
    bool        first_class = true;
    for (auto const& cls : p.classes()) {
      out += first_class ? "{" : ",{";
      first_class = false;
      for (std::size_t k = 0; k < cls.size(); ++k) {
        if (k != 0) {
          out += ",";
        }
        out += cls[k] < names.size() ? names[cls[k]] : std::to_string(cls[k]);
      }
      out += "}";
    }
    return out + "}";
  }

}  // namespace congkit
