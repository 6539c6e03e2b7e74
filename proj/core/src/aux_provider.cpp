#include "gw/aux_provider.hpp"

#include "gw/error.hpp"
#include "gw/severi.hpp"

namespace gw::severi {

AuxKey AuxKey::normalized() const {
  if (fixed.empty() && free.all_simple()) return {e, delta, {}, {}};
  return *this;
}

std::string AuxKey::to_string() const {
  std::string out = "N{" + std::to_string(e) + "," + std::to_string(delta);
  if (!is_plain()) out += "," + fixed.to_string() + "," + free.to_string();
  return out + "}";
}

MissingAuxError::MissingAuxError(AuxKey key)
    : std::runtime_error("missing auxiliary degree " + key.to_string()),
      key_(std::move(key)) {}

void TableAuxProvider::insert(const AuxKey& key, Integer value) {
  auto [it, inserted] = entries_.emplace(key.normalized(), std::move(value));
  if (!inserted) {
    throw DomainError("duplicate auxiliary key " + it->first.to_string());
  }
}

std::optional<Integer> TableAuxProvider::lookup(const AuxKey& key) const {
  const auto it = entries_.find(key.normalized());
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

LayeredAuxProvider::LayeredAuxProvider(
    std::shared_ptr<const AuxProvider> overlay,
    std::shared_ptr<const AuxProvider> base)
    : overlay_(std::move(overlay)), base_(std::move(base)) {}

std::optional<Integer> LayeredAuxProvider::lookup(const AuxKey& key) const {
  if (auto v = overlay_->lookup(key)) return v;
  return base_->lookup(key);
}

namespace {

class PaperAuxProvider : public AuxProvider {
 public:
  PaperAuxProvider() {
    table_.insert({3, 3, {}, {}}, 15);
    table_.insert({3, 2, {1}, {2}}, 21);
    table_.insert({3, 1, {2}, {1}}, 12);
    table_.insert({3, 1, {0, 1}, {1}}, 10);
    table_.insert({3, 1, {1}, {0, 1}}, 16);
    table_.insert({3, 2, {}, {1, 1}}, 30);
    table_.insert({3, 1, {}, {0, 0, 1}}, 21);
  }

  std::optional<Integer> lookup(const AuxKey& raw) const override {
    const AuxKey key = raw.normalized();
    if (auto v = table_.lookup(key)) return v;
    const int e = key.e;
    if (e < 1) return std::nullopt;

    if (key.is_plain() && key.delta == 2 && e >= 3) return roberts_closed(e);

    if (key.delta == 0) {
      if (key.is_plain()) return 1;
      if (key.fixed.weight() + key.free.weight() != e) return std::nullopt;
      return key.free.mult_m() * key.free.perm_count_n();
    }

    if (key.delta == 1 && key.fixed == Partition{1} &&
        key.free == Partition::simple(e - 1)) {
      return Integer(3) * (e - 1) * (e - 1);
    }
    if (key.delta == 1 && key.fixed.empty() && e >= 2 &&
        key.free == Partition{e - 2, 1}) {
      return Integer(6) * e * (e - 1) * (e - 2);
    }
    return std::nullopt;
  }

 private:
  TableAuxProvider table_;
};

}  // namespace

std::shared_ptr<const AuxProvider> paper_aux() {
  static const auto provider = std::make_shared<const PaperAuxProvider>();
  return provider;
}

}  // namespace gw::severi
