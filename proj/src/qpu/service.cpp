// Copyright 2026 The PhotonQ Authors
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

#include "photonq/qpu/service.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "photonq/util/wire.hpp"

namespace photonq::qpu {

using nlohmann::json;

namespace {

void reply_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

int status_for_reject(const std::string& code) {
  if (code == "QUEUE_FULL") return 429;
  return 400;
}

json record_to_json(const JobRecord& record) {
  json body{{"job_id", record.job_id},
            {"owner", record.owner},
            {"state", job_state_name(record.state)},
            {"spec", wire::spec_to_json(record.spec, record.seed)},
            {"submitted_at_ms", record.submitted_at_ms}};
  if (record.started_at_ms > 0) {
    body["started_at_ms"] = record.started_at_ms;
    body["start_index"] = record.start_index;
  }
  if (record.finished_at_ms > 0) body["finished_at_ms"] = record.finished_at_ms;
  if (record.state == JobState::failed) body["error"] = record.error;
  return body;
}

}  // namespace

QpuHttpServer::QpuHttpServer(QpuDevice& device, std::string host)
    : device_(device), host_(std::move(host)), server_(std::make_unique<httplib::Server>()) {
  auto& svr = *server_;

  svr.Post("/v1/jobs", [this](const httplib::Request& req, httplib::Response& res) {
    json body;
    fock::CircuitSpec spec;
    std::optional<std::uint64_t> seed;
    try {
      body = json::parse(req.body);
      spec = wire::spec_from_json(body);
      seed = wire::seed_from_json(body);
    } catch (const std::exception& e) {
      reply_json(res, 400, wire::error_body("BAD_REQUEST", e.what()));
      return;
    }
    const std::string owner =
        req.has_header("X-User") ? req.get_header_value("X-User") : "anonymous";
    const auto outcome = device_.submit(spec, seed, owner);
    if (const auto* rejected = std::get_if<QpuDevice::Rejected>(&outcome)) {
      reply_json(res, status_for_reject(rejected->code),
                 wire::error_body(rejected->code, rejected->message));
      return;
    }
    reply_json(res, 201,
               json{{"job_id", std::get<std::string>(outcome)}, {"state", "queued"}});
  });

  svr.Get("/v1/jobs/:id", [this](const httplib::Request& req, httplib::Response& res) {
    const auto record = device_.get_job(req.path_params.at("id"));
    if (!record) {
      reply_json(res, 404, wire::error_body("NOT_FOUND", "unknown job id"));
      return;
    }
    reply_json(res, 200, record_to_json(*record));
  });

  svr.Get("/v1/jobs/:id/results",
          [this](const httplib::Request& req, httplib::Response& res) {
            const auto record = device_.get_job(req.path_params.at("id"));
            if (!record) {
              reply_json(res, 404, wire::error_body("NOT_FOUND", "unknown job id"));
              return;
            }
            if (record->state == JobState::completed) {
              reply_json(res, 200,
                         json{{"job_id", record->job_id},
                              {"state", "completed"},
                              {"n_samples", record->spec.n_samples},
                              {"histogram", wire::histogram_to_json(record->result)}});
            } else if (record->state == JobState::failed) {
              reply_json(res, 200,
                         json{{"job_id", record->job_id},
                              {"state", "failed"},
                              {"error", record->error}});
            } else {
              reply_json(res, 409,
                         wire::error_body("NOT_READY", "job is not terminal yet"));
            }
          });

  svr.Delete("/v1/jobs/:id", [this](const httplib::Request& req, httplib::Response& res) {
    switch (device_.cancel(req.path_params.at("id"))) {
      case QpuDevice::CancelResult::ok:
        reply_json(res, 200, json{{"job_id", req.path_params.at("id")}, {"cancelled", true}});
        return;
      case QpuDevice::CancelResult::not_found:
        reply_json(res, 404, wire::error_body("NOT_FOUND", "unknown job id"));
        return;
      case QpuDevice::CancelResult::invalid_state:
        reply_json(res, 409,
                   wire::error_body("INVALID_STATE", "only queued jobs can be cancelled"));
        return;
    }
  });

  svr.Get("/v1/admin/status", [this](const httplib::Request&, httplib::Response& res) {
    const DeviceStatus status = device_.status();
    reply_json(res, 200,
               json{{"device_id", status.device_id},
                    {"num_modes", status.num_modes},
                    {"max_photons", status.max_photons},
                    {"queue_depth", status.queue_depth},
                    {"jobs_completed", status.jobs_completed},
                    {"uptime_s", status.uptime_s},
                    {"busy", status.busy}});
  });
}

QpuHttpServer::~QpuHttpServer() { stop(); }

int QpuHttpServer::start(int port) {
  if (port == 0) {
    port_ = server_->bind_to_any_port(host_);
    if (port_ < 0) return -1;
  } else {
    if (!server_->bind_to_port(host_, port)) return -1;
    port_ = port;
  }
  serve_thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port_;
}

void QpuHttpServer::stop() {
  if (server_ && server_->is_running()) server_->stop();
  if (serve_thread_.joinable()) serve_thread_.join();
}

std::string QpuHttpServer::base_url() const {
  return "http://" + host_ + ":" + std::to_string(port_);
}

}  // namespace photonq::qpu
