// Copyright 2026 The Snapcode Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SNAPCODE_ERROR_HPP_
#define SNAPCODE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace snapcode {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fewer distinct labels than the requested top-k.
class InsufficientLabels : public Error {
 public:
  InsufficientLabels(std::size_t wanted, std::size_t available)
      : Error("insufficient labels: requested top-" + std::to_string(wanted) +
              " but only " + std::to_string(available) +
              " distinct labels in the training split"),
        wanted_(wanted),
        available_(available) {}

  std::size_t wanted() const { return wanted_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t wanted_;
  std::size_t available_;
};

// Text handed to the renderer does not fit the configured window.
class WindowOverflow : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace snapcode

#endif  // SNAPCODE_ERROR_HPP_
