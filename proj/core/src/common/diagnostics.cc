//
// Copyright 2026 The adalab Authors.
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
//

#include "adalab/common/diagnostics.h"

#include <iostream>
#include <mutex>
#include <utility>

namespace adalab {
namespace {

std::mutex& SinkMutex() {
  static std::mutex mu;
  return mu;
}

WarningSink& CurrentSink() {
  static WarningSink sink;
  return sink;
}

}  // namespace

WarningSink SetWarningSink(WarningSink sink) {
  std::lock_guard<std::mutex> lock(SinkMutex());
  return std::exchange(CurrentSink(), std::move(sink));
}

void Warn(absl::string_view message) {
  std::lock_guard<std::mutex> lock(SinkMutex());
  if (CurrentSink()) {
    CurrentSink()(message);
  } else {
    std::cerr << "adalab warning: " << message << '\n';
  }
}

ScopedWarningCapture::ScopedWarningCapture() {
  previous_ = SetWarningSink([this](absl::string_view message) {
    text_.append(message.data(), message.size());
    text_.push_back('\n');
    ++count_;
  });
}

ScopedWarningCapture::~ScopedWarningCapture() {
  SetWarningSink(std::move(previous_));
}

}  // namespace adalab
