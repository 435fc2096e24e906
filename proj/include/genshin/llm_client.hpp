// Copyright 2026 The Genshin Authors
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

#ifndef GENSHIN_LLM_CLIENT_HPP_
#define GENSHIN_LLM_CLIENT_HPP_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace genshin::llm {

struct ChatRequest {
  std::string model;
  std::string system_prompt;  // empty = no system message
  std::string user_prompt;
  double temperature = 0.0;
  int max_tokens = 1024;
};

struct ChatResponse {
  std::string text;
  bool cached = false;
  std::int64_t latency_ms = 0;
};

// Chat backend. complete() must tolerate concurrent callers up to
// max_inflight().
class ChatClient {
 public:
  virtual ~ChatClient() = default;
  virtual ChatResponse complete(const ChatRequest& request) = 0;
  virtual int max_inflight() const { return 4; }
};

struct HttpClientOptions {
  std::string base_url;
  std::string api_key;
  int max_retries = 3;
  int backoff_ms = 250;
  int timeout_s = 120;
  int max_inflight = 4;
  // When set, responses to temperature-0 requests are cached on disk, keyed
  // by SHA-256 over (endpoint, model, temperature, prompts). Sampled
  // requests (temperature > 0) always go to the network.
  std::optional<std::filesystem::path> cache_dir;
};

// OpenAI-style chat-completions client: POST <base>/v1/chat/completions
// with a Bearer token, reading choices[0].message.content. A base URL
// already ending in /v1 is not doubled. Retries transport errors, 408/429
// and 5xx with exponential backoff; 401/403 raise AuthError immediately.
class HttpChatClient final : public ChatClient {
 public:
  explicit HttpChatClient(HttpClientOptions options);
  ~HttpChatClient() override;

  ChatResponse complete(const ChatRequest& request) override;
  int max_inflight() const override { return options_.max_inflight; }

  // Resolved endpoint URL, exposed for cache-key tests.
  const std::string& endpoint() const { return endpoint_; }

 private:
  class Gate;
  HttpClientOptions options_;
  std::string endpoint_;
  std::unique_ptr<Gate> gate_;
};

// Hex SHA-256 cache key over the request identity.
std::string cache_key(const std::string& endpoint, const ChatRequest& request);

// Offline stand-in driven by a rule script. Rules match when `match` is
// empty or occurs in the user prompt; the first match wins. A rule may
// instead echo a slice of the prompt: the text between `echo_start` and
// `echo_end` replaces "<<echo>>" (raw) and "<<echo_json>>" (JSON-escaped)
// in the response. Script format: JSONL objects with keys match, response,
// echo_start, echo_end (all optional except response).
class MockChatClient final : public ChatClient {
 public:
  struct Rule {
    std::string match;
    std::string response;
    std::string echo_start;
    std::string echo_end;
  };

  explicit MockChatClient(std::vector<Rule> rules);
  MockChatClient(MockChatClient&& other) noexcept
      : rules_(std::move(other.rules_)), calls_(other.calls_.load()) {}
  static MockChatClient from_script(const std::filesystem::path& path);

  ChatResponse complete(const ChatRequest& request) override;
  int max_inflight() const override { return 0; }

  // Number of requests served; used by call-budget tests.
  std::uint64_t calls() const;

 private:
  std::vector<Rule> rules_;
  std::atomic<std::uint64_t> calls_{0};
};

// Extracts the first balanced {...} object from an LLM reply that may wrap
// it in prose or code fences. Throws Error when no parsable object exists.
nlohmann::json extract_json_object(const std::string& reply);

struct LlmEnvConfig {
  std::string base_url;
  std::string api_key;
  std::string model;
  std::string mock_script;  // path; takes precedence when set
};

// Reads GENSHIN_LLM_BASE_URL / _API_KEY / _MODEL / _MOCK.
LlmEnvConfig read_llm_env();

// Builds a client from explicit settings merged over the environment.
// A mock script (explicit or via GENSHIN_LLM_MOCK) wins over HTTP.
std::unique_ptr<ChatClient> make_chat_client(
    const LlmEnvConfig& overrides,
    const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

}  // namespace genshin::llm

#endif  // GENSHIN_LLM_CLIENT_HPP_
