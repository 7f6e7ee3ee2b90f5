#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "tifl/focal.hpp"
#include "tifl/geometry.hpp"
#include "tifl/guidelines.hpp"

namespace tifl {

struct ApiConfig {
  SphereModel model;
  Segmentation segmentation;
  double tau = kDefaultFocalThreshold;
  int min_resolution = 16;
  int max_resolution = 257;
  std::chrono::milliseconds plan_timeout{120000};
  GuidelineGrids guideline_grids = GuidelineGrids::defaults();
  int guideline_resolution = 101;
  std::string cors_origin = "*";
};

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Transport-free handlers for the /api/v1 endpoints. Each call is a pure function of the
/// request and the immutable config, except that the guideline payload is computed on first
/// use and then served from a cache for the lifetime of the service.
class ApiService {
 public:
  explicit ApiService(ApiConfig config = {});

  const ApiConfig& config() const { return config_; }

  /// Routes by method and path. Unknown paths give 404, wrong methods 405.
  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body) const;

  ApiResponse envelope(std::string_view body) const;
  ApiResponse scenarios() const;
  ApiResponse plan(std::string_view body) const;
  ApiResponse guidelines() const;

 private:
  ApiConfig config_;
  mutable std::once_flag guidelines_once_;
  mutable std::string guidelines_body_;
};

}  // namespace tifl
