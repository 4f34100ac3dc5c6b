// Copyright 2026 The provrdf Authors
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

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace provrdf {

/// Proleptic-Gregorian calendar date, written `YYYY-MM-DD`.
class Date {
 public:
  constexpr Date() = default;
  explicit Date(std::chrono::year_month_day ymd) : ymd_(ymd) {}
  explicit Date(std::chrono::sys_days days) : ymd_(days) {}

  /// Strict `YYYY-MM-DD` with a four-digit year; nullopt for anything else,
  /// including impossible dates such as 2010-02-30.
  static std::optional<Date> parse(std::string_view text);

  std::string str() const;
  int year() const { return static_cast<int>(ymd_.year()); }
  std::chrono::sys_days days() const { return std::chrono::sys_days(ymd_); }

  friend bool operator==(const Date& a, const Date& b) { return a.ymd_ == b.ymd_; }
  friend std::strong_ordering operator<=>(const Date& a, const Date& b) {
    return a.days().time_since_epoch().count() <=> b.days().time_since_epoch().count();
  }

 private:
  std::chrono::year_month_day ymd_{std::chrono::year{1970}, std::chrono::month{1}, std::chrono::day{1}};
};

}  // namespace provrdf
