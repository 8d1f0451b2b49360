#include "chromapos/partition.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "chromapos/error.hpp"

namespace chromapos {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      fail(ErrorKind::BadParameter, "partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      fail(ErrorKind::BadParameter, "partition parts must be weakly decreasing");
    }
    degree_ += parts_[i];
  }
}

Partition Partition::with_ones(std::vector<int> head, int ones) {
  if (ones < 0) fail(ErrorKind::BadParameter, "negative multiplicity of ones");
  head.insert(head.end(), static_cast<std::size_t>(ones), 1);
  return Partition(std::move(head));
}

Partition Partition::rectangle(int part, int count) {
  if (count < 0) fail(ErrorKind::BadParameter, "negative part count");
  return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

std::vector<long> Partition::multiplicities() const {
  std::vector<long> r(static_cast<std::size_t>(degree_) + 1, 0);
  for (int p : parts_) r[static_cast<std::size_t>(p)] += 1;
  return r;
}

Integer Partition::multiplicity_factorial() const {
  Integer out = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= parts_.size(); ++i) {
    if (i < parts_.size() && parts_[i] == parts_[i - 1]) {
      ++run;
    } else {
      out *= factorial(static_cast<long>(run));
      run = 1;
    }
  }
  return out;
}

std::string Partition::to_text() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition Partition::from_text(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    fail(ErrorKind::ParseError, "partition must look like [3,2,1]: " + text);
  }
  std::string body = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) fail(ErrorKind::ParseError, "empty partition part: " + text);
      try {
        std::size_t pos = 0;
        int value = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(item);
        parts.push_back(value);
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad partition part '" + item + "' in " + text);
      }
    }
    if (!body.empty() && body.back() == ',') {
      fail(ErrorKind::ParseError, "trailing comma in partition: " + text);
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error&) {
    fail(ErrorKind::ParseError, "not a partition (parts must be positive, weakly decreasing): " + text);
  }
}

Partition conjugate(const Partition& lambda) {
  const auto& p = lambda.parts();
  if (p.empty()) return Partition();
  std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
  for (int j = 1; j <= p[0]; ++j) {
    out[static_cast<std::size_t>(j - 1)] =
        static_cast<int>(std::count_if(p.begin(), p.end(), [j](int x) { return x >= j; }));
  }
  return Partition(std::move(out));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.degree() != mu.degree()) {
    fail(ErrorKind::DegreeMismatch,
         "dominance needs equal degrees: " + lambda.to_text() + " vs " + mu.to_text());
  }
  long lsum = 0, msum = 0;
  std::size_t k = std::max(lambda.parts().size(), mu.parts().size());
  for (std::size_t i = 0; i < k; ++i) {
    lsum += i < lambda.parts().size() ? lambda.parts()[i] : 0;
    msum += i < mu.parts().size() ? mu.parts()[i] : 0;
    if (msum > lsum) return false;
  }
  return true;
}

bool partition_precedes(const Partition& a, const Partition& b) {
  return a.parts() > b.parts();
}

bool TermOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return partition_precedes(a, b);
}

namespace {

void generate_partitions(int remaining, int max_part, std::vector<int>& stack,
                         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    generate_partitions(remaining - p, p, stack, out);
    stack.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) fail(ErrorKind::BadParameter, "partitions_of negative degree");
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Partition> out;
    std::vector<int> stack;
    generate_partitions(n, n == 0 ? 1 : n, stack, out);
    it = cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

Partition union_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.to_text();
}

}  // namespace chromapos
