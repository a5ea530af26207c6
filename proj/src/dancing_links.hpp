#pragma once

#include <cstdint>
#include <vector>

namespace designforge {

// Knuth's Algorithm X on a toroidal doubly linked matrix. Node 0 is the root,
// nodes 1..columns are column headers.
class DancingLinks {
 public:
  explicit DancingLinks(int columns) {
    const int headers = columns + 1;
    left_.resize(headers);
    right_.resize(headers);
    up_.resize(headers);
    down_.resize(headers);
    column_.resize(headers);
    row_.assign(headers, -1);
    size_.assign(headers, 0);
    for (int i = 0; i < headers; ++i) {
      left_[i] = i == 0 ? columns : i - 1;
      right_[i] = i == columns ? 0 : i + 1;
      up_[i] = down_[i] = column_[i] = i;
    }
  }

  // `cols` are 1-based column ids.
  void add_row(const std::vector<int>& cols, int row_id) {
    int first = -1;
    for (int c : cols) {
      const int node = static_cast<int>(left_.size());
      left_.push_back(node);
      right_.push_back(node);
      up_.push_back(up_[c]);
      down_.push_back(c);
      column_.push_back(c);
      row_.push_back(row_id);
      down_[up_[c]] = node;
      up_[c] = node;
      ++size_[c];
      if (first < 0) {
        first = node;
      } else {
        left_[node] = left_[first];
        right_[node] = first;
        right_[left_[first]] = node;
        left_[first] = node;
      }
    }
    if (row_first_.size() <= static_cast<std::size_t>(row_id)) row_first_.resize(row_id + 1, -1);
    row_first_[row_id] = first;
  }

  // Selects a row before the search starts.
  void force_row(int row_id) {
    const int first = row_first_.at(row_id);
    cover(column_[first]);
    for (int j = right_[first]; j != first; j = right_[j]) cover(column_[j]);
    solution_.push_back(row_id);
  }

  enum class Result { found, exhausted, budget };

  Result search(std::uint64_t budget) {
    budget_ = budget;
    return recurse();
  }

  const std::vector<int>& solution() const { return solution_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void cover(int c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (int i = down_[c]; i != c; i = down_[i]) {
      for (int j = right_[i]; j != i; j = right_[j]) {
        up_[down_[j]] = up_[j];
        down_[up_[j]] = down_[j];
        --size_[column_[j]];
      }
    }
  }

  void uncover(int c) {
    for (int i = up_[c]; i != c; i = up_[i]) {
      for (int j = left_[i]; j != i; j = left_[j]) {
        ++size_[column_[j]];
        up_[down_[j]] = j;
        down_[up_[j]] = j;
      }
    }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  Result recurse() {
    if (right_[0] == 0) return Result::found;
    int best = right_[0];
    for (int c = right_[best]; c != 0; c = right_[c]) {
      if (size_[c] < size_[best]) best = c;
    }
    if (size_[best] == 0) return Result::exhausted;
    cover(best);
    for (int r = down_[best]; r != best; r = down_[r]) {
      if (++nodes_ > budget_) {
        uncover(best);
        return Result::budget;
      }
      solution_.push_back(row_[r]);
      for (int j = right_[r]; j != r; j = right_[j]) cover(column_[j]);
      const Result result = recurse();
      if (result == Result::found) return result;
      for (int j = left_[r]; j != r; j = left_[j]) uncover(column_[j]);
      solution_.pop_back();
      if (result == Result::budget) {
        uncover(best);
        return result;
      }
    }
    uncover(best);
    return Result::exhausted;
  }

  std::vector<int> left_, right_, up_, down_, column_, row_, size_;
  std::vector<int> row_first_;
  std::vector<int> solution_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = 0;
};

}  // namespace designforge
