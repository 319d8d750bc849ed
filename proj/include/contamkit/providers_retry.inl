#pragma once

#include <algorithm>
#include <thread>

#include "contamkit/errors.hpp"

namespace contamkit {

class TransientError : public ProviderError {
 public:
  using ProviderError::ProviderError;
};

template <typename Fn>
auto retry_with_backoff(int retries,
                        const std::vector<std::chrono::milliseconds>& backoff,
                        Fn&& attempt) -> decltype(attempt()) {
  for (int attempt_no = 0;; ++attempt_no) {
    try {
      return attempt();
    } catch (const TransientError& e) {
      if (attempt_no >= retries) {
        throw ProviderError(std::string("retries exhausted after ") +
                            std::to_string(attempt_no + 1) +
                            " attempts: " + e.what());
      }
      if (!backoff.empty()) {
        std::size_t idx = std::min<std::size_t>(attempt_no, backoff.size() - 1);
        std::this_thread::sleep_for(backoff[idx]);
      }
    }
  }
}

}  // namespace contamkit
