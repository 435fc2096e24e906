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

#include "genshin/llm_client.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include <httplib.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "genshin/error.hpp"
#include "http_util.hpp"

namespace genshin::llm {
namespace {

using nlohmann::json;

std::string truncate_for_message(const std::string& text,
                                 std::size_t limit = 200) {
  if (text.size() <= limit) return text;
  return text.substr(0, limit) + "...";
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

void replace_all(std::string& haystack, const std::string& needle,
                 const std::string& replacement) {
  if (needle.empty()) return;
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    haystack.replace(pos, needle.size(), replacement);
    pos += replacement.size();
  }
}

std::string json_escape(const std::string& text) {
  const std::string quoted = json(text).dump();
  return quoted.substr(1, quoted.size() - 2);  // strip outer quotes
}

}  // namespace

std::string cache_key(const std::string& endpoint,
                      const ChatRequest& request) {
  char temperature[64];
  std::snprintf(temperature, sizeof temperature, "%.17g",
                request.temperature);
  std::ostringstream material;
  // Length-prefix free-form parts so distinct requests cannot collide.
  material << endpoint << '\n'
           << request.model << '\n'
           << temperature << '\n'
           << request.system_prompt.size() << ':' << request.system_prompt
           << '\n'
           << request.user_prompt.size() << ':' << request.user_prompt;
  return sha256_hex(material.str());
}

// Bounds in-flight requests with a counting gate.
class HttpChatClient::Gate {
 public:
  explicit Gate(int capacity) : available_(capacity) {}

  void acquire() {
    if (available_ <= 0) return;  // unbounded
    std::unique_lock lock(mutex_);
    cv_.wait(lock, [&] { return in_use_ < available_; });
    ++in_use_;
  }

  void release() {
    if (available_ <= 0) return;
    {
      std::lock_guard lock(mutex_);
      --in_use_;
    }
    cv_.notify_one();
  }

 private:
  int available_;
  int in_use_ = 0;
  std::mutex mutex_;
  std::condition_variable cv_;
};

HttpChatClient::HttpChatClient(HttpClientOptions options)
    : options_(std::move(options)),
      gate_(std::make_unique<Gate>(options_.max_inflight)) {
  std::string base = options_.base_url;
  while (!base.empty() && base.back() == '/') base.pop_back();
  if (base.empty()) {
    throw ConfigError("LLM base URL must be configured");
  }
  const bool has_v1 = base.size() >= 3 && base.compare(base.size() - 3, 3,
                                                       "/v1") == 0;
  endpoint_ = base + (has_v1 ? "/chat/completions" : "/v1/chat/completions");
  internal::split_url(endpoint_);  // validate eagerly
  if (options_.cache_dir) {
    std::filesystem::create_directories(*options_.cache_dir);
  }
}

HttpChatClient::~HttpChatClient() = default;

ChatResponse HttpChatClient::complete(const ChatRequest& request) {
  if (request.model.empty()) {
    throw ConfigError("LLM model must be configured");
  }
  const auto started = std::chrono::steady_clock::now();
  const auto elapsed_ms = [started] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - started)
        .count();
  };
  // Only deterministic requests are cacheable; sampled completions must
  // stay fresh or repeated attack attempts would all collapse to one reply.
  const bool cacheable = options_.cache_dir && request.temperature == 0.0;
  std::filesystem::path cache_path;
  if (cacheable) {
    cache_path =
        *options_.cache_dir / (cache_key(endpoint_, request) + ".json");
    std::ifstream in(cache_path, std::ios::binary);
    if (in) {
      json entry;
      try {
        in >> entry;
        return {entry.at("response").get<std::string>(), true, elapsed_ms()};
      } catch (const json::exception&) {
        // Corrupt cache entry: fall through and refetch.
      }
    }
  }

  const internal::UrlParts url = internal::split_url(endpoint_);
  json messages = json::array();
  if (!request.system_prompt.empty()) {
    messages.push_back({{"role", "system"}, {"content", request.system_prompt}});
  }
  messages.push_back({{"role", "user"}, {"content", request.user_prompt}});
  const json body{{"model", request.model},
                  {"messages", messages},
                  {"temperature", request.temperature},
                  {"max_tokens", request.max_tokens}};

  gate_->acquire();
  struct Released {
    Gate* gate;
    ~Released() { gate->release(); }
  } released{gate_.get()};

  std::string last_failure;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) internal::backoff_sleep(options_.backoff_ms, attempt - 1);
    httplib::Client client(url.origin);
    client.set_connection_timeout(options_.timeout_s);
    client.set_read_timeout(options_.timeout_s);
    httplib::Headers headers;
    if (!options_.api_key.empty()) {
      headers.emplace("Authorization", "Bearer " + options_.api_key);
    }
    auto result = client.Post(url.path_prefix, headers, body.dump(),
                              "application/json");
    if (!result) {
      last_failure = "transport: " + httplib::to_string(result.error());
      continue;
    }
    if (result->status == 401 || result->status == 403) {
      throw AuthError("LLM endpoint rejected credentials (HTTP " +
                      std::to_string(result->status) + ")");
    }
    if (internal::retryable_status(result->status)) {
      last_failure = "HTTP " + std::to_string(result->status) + ": " +
                     truncate_for_message(result->body);
      continue;
    }
    if (result->status != 200) {
      throw Error("LLM endpoint returned HTTP " +
                  std::to_string(result->status) + ": " +
                  truncate_for_message(result->body));
    }
    std::string text;
    try {
      const json reply = json::parse(result->body);
      text = reply.at("choices").at(0).at("message").at("content")
                 .get<std::string>();
    } catch (const json::exception& e) {
      throw Error(std::string("malformed completion response: ") + e.what() +
                  "; body: " + truncate_for_message(result->body));
    }
    if (cacheable) {
      static std::atomic<std::uint64_t> temp_counter{0};
      const json entry{{"endpoint", endpoint_},
                       {"model", request.model},
                       {"temperature", request.temperature},
                       {"response", text}};
      const auto temp_path =
          cache_path.string() + ".tmp" +
          std::to_string(temp_counter.fetch_add(1, std::memory_order_relaxed));
      {
        std::ofstream out(temp_path, std::ios::binary | std::ios::trunc);
        out << entry.dump(2) << '\n';
      }
      std::error_code ec;
      std::filesystem::rename(temp_path, cache_path, ec);
      if (ec) std::filesystem::remove(temp_path, ec);
    }
    return {std::move(text), false, elapsed_ms()};
  }
  throw TransportError("LLM request failed after " +
                       std::to_string(options_.max_retries + 1) +
                       " attempts (" + last_failure + ")");
}

MockChatClient::MockChatClient(std::vector<Rule> rules)
    : rules_(std::move(rules)) {}

MockChatClient MockChatClient::from_script(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open mock script " + path.string());
  std::vector<Rule> rules;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(path.string() + ":" + std::to_string(line_number) +
                  ": invalid JSON: " + e.what());
    }
    Rule rule;
    rule.match = record.value("match", "");
    if (!record.contains("response") || !record["response"].is_string()) {
      throw Error(path.string() + ":" + std::to_string(line_number) +
                  ": rule needs a string \"response\"");
    }
    rule.response = record["response"].get<std::string>();
    rule.echo_start = record.value("echo_start", "");
    rule.echo_end = record.value("echo_end", "");
    rules.push_back(std::move(rule));
  }
  return MockChatClient(std::move(rules));
}

ChatResponse MockChatClient::complete(const ChatRequest& request) {
  calls_.fetch_add(1, std::memory_order_relaxed);
  for (const Rule& rule : rules_) {
    if (!rule.match.empty() &&
        request.user_prompt.find(rule.match) == std::string::npos) {
      continue;
    }
    std::string response = rule.response;
    if (!rule.echo_start.empty()) {
      const auto start = request.user_prompt.find(rule.echo_start);
      if (start == std::string::npos) {
        throw TransportError("mock: echo_start marker not found");
      }
      const auto from = start + rule.echo_start.size();
      auto to = request.user_prompt.size();
      if (!rule.echo_end.empty()) {
        to = request.user_prompt.find(rule.echo_end, from);
        if (to == std::string::npos) {
          throw TransportError("mock: echo_end marker not found");
        }
      }
      const std::string captured =
          request.user_prompt.substr(from, to - from);
      replace_all(response, "<<echo_json>>", json_escape(captured));
      replace_all(response, "<<echo>>", captured);
    }
    return {std::move(response), false};
  }
  throw TransportError("mock: no rule matches request for model \"" +
                       request.model + "\"");
}

std::uint64_t MockChatClient::calls() const {
  return calls_.load(std::memory_order_relaxed);
}

json extract_json_object(const std::string& reply) {
  const auto first = reply.find('{');
  if (first == std::string::npos) {
    throw Error("no JSON object found: " + truncate_for_message(reply));
  }
  for (std::size_t start = first; start != std::string::npos;
       start = reply.find('{', start + 1)) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < reply.size(); ++i) {
      const char c = reply[i];
      if (in_string) {
        if (escaped) {
          escaped = false;
        } else if (c == '\\') {
          escaped = true;
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}') {
        if (--depth == 0) {
          const std::string candidate = reply.substr(start, i - start + 1);
          try {
            return json::parse(candidate);
          } catch (const json::exception&) {
            break;  // try the next opening brace
          }
        }
      }
    }
  }
  throw Error("malformed JSON object in reply: " +
              truncate_for_message(reply));
}

LlmEnvConfig read_llm_env() {
  auto get = [](const char* name) {
    const char* value = std::getenv(name);
    return value == nullptr ? std::string() : std::string(value);
  };
  LlmEnvConfig config;
  config.base_url = get("GENSHIN_LLM_BASE_URL");
  config.api_key = get("GENSHIN_LLM_API_KEY");
  config.model = get("GENSHIN_LLM_MODEL");
  config.mock_script = get("GENSHIN_LLM_MOCK");
  return config;
}

std::unique_ptr<ChatClient> make_chat_client(
    const LlmEnvConfig& overrides,
    const std::optional<std::filesystem::path>& cache_dir) {
  const LlmEnvConfig env = read_llm_env();
  auto pick = [](const std::string& a, const std::string& b) {
    return a.empty() ? b : a;
  };
  const std::string mock = pick(overrides.mock_script, env.mock_script);
  if (!mock.empty()) {
    return std::make_unique<MockChatClient>(MockChatClient::from_script(mock));
  }
  HttpClientOptions options;
  options.base_url = pick(overrides.base_url, env.base_url);
  options.api_key = pick(overrides.api_key, env.api_key);
  options.cache_dir = cache_dir;
  if (options.base_url.empty()) {
    throw ConfigError(
        "no LLM backend configured: set --llm-base-url / GENSHIN_LLM_BASE_URL "
        "or a mock script via --llm-mock / GENSHIN_LLM_MOCK");
  }
  return std::make_unique<HttpChatClient>(std::move(options));
}

}  // namespace genshin::llm
