#include "setfam/universe.hpp"

namespace setfam {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > static_cast<std::size_t>(max_universe_size))
    throw std::invalid_argument("Universe: size must be between 1 and 16");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [_, fresh] = index_.emplace(labels_[i], static_cast<int>(i));
    if (!fresh) throw std::invalid_argument("Universe: duplicate label '" + labels_[i] + "'");
  }
}

std::optional<int> Universe::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Universe::index_of(const std::string& label) const {
  auto i = find(label);
  if (!i) throw std::invalid_argument("Universe: unknown label '" + label + "'");
  return *i;
}

TotalMap::TotalMap(Universe domain, Universe codomain, std::vector<int> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != static_cast<std::size_t>(domain_.size()))
    throw std::invalid_argument("TotalMap: image size must match domain size");
  for (int y : image_)
    if (y < 0 || y >= codomain_.size())
      throw std::invalid_argument("TotalMap: image value out of codomain range");
}

TotalMap TotalMap::identity(const Universe& u) {
  std::vector<int> img(static_cast<std::size_t>(u.size()));
  for (int i = 0; i < u.size(); ++i) img[static_cast<std::size_t>(i)] = i;
  return TotalMap(u, u, std::move(img));
}

TotalMap TotalMap::from_labels(const Universe& domain, const Universe& codomain,
                               const std::vector<std::string>& image_labels) {
  std::vector<int> img;
  img.reserve(image_labels.size());
  for (const auto& l : image_labels) img.push_back(codomain.index_of(l));
  return TotalMap(domain, codomain, std::move(img));
}

SubsetMask TotalMap::preimage(SubsetMask s) const {
  if (s.size != codomain_.size())
    throw std::invalid_argument("TotalMap: preimage mask sized to wrong universe");
  SubsetMask out = SubsetMask::empty_set(domain_.size());
  for (int i = 0; i < domain_.size(); ++i)
    if (s.contains(image_[static_cast<std::size_t>(i)])) out.bits |= 1u << i;
  return out;
}

}  // namespace setfam
