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

#include "photonq/sched/service.hpp"

#include <httplib.h>

namespace photonq::sched {

using nlohmann::json;

json batch_job_to_json(const BatchJob& job) {
  json body{{"job_id", job.job_id},
            {"owner", job.owner},
            {"state", batch_state_name(job.state)},
            {"priority", job.priority},
            {"request",
             {{"cpus", job.request.cpus},
              {"gpus", job.request.gpus},
              {"qpus", job.request.qpus}}},
            {"workload", {{"name", job.workload.name}, {"params", job.workload.params}}},
            {"submitted_at_s", job.submitted_at_s}};
  if (job.granted) {
    body["allocation"] = {{"cpus", job.granted->cpus},
                          {"gpus", job.granted->gpus},
                          {"qpu_endpoints", job.granted->qpu_endpoints}};
    body["started_at_s"] = job.started_at_s;
  }
  if (job.state == BatchState::done) body["result"] = job.result;
  if (job.state == BatchState::failed) body["error"] = job.error;
  if (job.state == BatchState::done || job.state == BatchState::failed ||
      job.state == BatchState::cancelled) {
    body["finished_at_s"] = job.finished_at_s;
  }
  return body;
}

json cluster_status_to_json(const ClusterStatus& status) {
  json qpus = json::array();
  for (const auto& endpoint : status.qpus) {
    json entry{{"endpoint", endpoint.url},
               {"state", endpoint.holder.empty() ? "free" : "held"},
               {"healthy", endpoint.healthy}};
    if (!endpoint.holder.empty()) entry["holder"] = endpoint.holder;
    qpus.push_back(std::move(entry));
  }
  json users = json::object();
  for (const auto& [user, account] : status.users) {
    users[user] = {{"decayed_usage", account.decayed_usage},
                   {"share_weight", account.share_weight}};
  }
  return json{{"pool",
               {{"cpus_total", status.cpus_total},
                {"cpus_free", status.cpus_free},
                {"gpus_total", status.gpus_total},
                {"gpus_free", status.gpus_free},
                {"qpus", std::move(qpus)}}},
              {"pending", status.pending},
              {"running", status.running},
              {"users", std::move(users)},
              {"jobs_completed", status.jobs_completed}};
}

namespace {

void reply_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

json error_body(const std::string& code, const std::string& message) {
  return json{{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

SchedHttpServer::SchedHttpServer(Cluster& cluster, std::string host)
    : cluster_(cluster),
      host_(std::move(host)),
      server_(std::make_unique<httplib::Server>()) {
  auto& svr = *server_;

  svr.Post("/v1/batch", [this](const httplib::Request& req, httplib::Response& res) {
    std::string owner;
    ResourceRequest request;
    WorkloadSpec workload;
    try {
      const json body = json::parse(req.body);
      owner = body.at("owner").get<std::string>();
      const json& r = body.at("request");
      request.cpus = r.value("cpus", 0);
      request.gpus = r.value("gpus", 0);
      request.qpus = r.value("qpus", 0);
      const json& w = body.at("workload");
      workload.name = w.at("name").get<std::string>();
      workload.params = w.value("params", json::object());
    } catch (const std::exception& e) {
      reply_json(res, 400, error_body("BAD_REQUEST", e.what()));
      return;
    }
    const auto outcome = cluster_.submit(owner, request, workload);
    if (const auto* rejected = std::get_if<Cluster::Rejected>(&outcome)) {
      reply_json(res, 400, error_body(rejected->code, rejected->message));
      return;
    }
    reply_json(res, 201,
               json{{"job_id", std::get<std::string>(outcome)}, {"state", "pending"}});
  });

  svr.Get("/v1/batch/:id", [this](const httplib::Request& req, httplib::Response& res) {
    const auto job = cluster_.get_job(req.path_params.at("id"));
    if (!job) {
      reply_json(res, 404, error_body("NOT_FOUND", "unknown batch job"));
      return;
    }
    reply_json(res, 200, batch_job_to_json(*job));
  });

  svr.Delete("/v1/batch/:id", [this](const httplib::Request& req, httplib::Response& res) {
    switch (cluster_.cancel(req.path_params.at("id"))) {
      case Cluster::CancelResult::ok:
        reply_json(res, 200,
                   json{{"job_id", req.path_params.at("id")}, {"cancelled", true}});
        return;
      case Cluster::CancelResult::not_found:
        reply_json(res, 404, error_body("NOT_FOUND", "unknown batch job"));
        return;
      case Cluster::CancelResult::invalid_state:
        reply_json(res, 409,
                   error_body("INVALID_STATE", "only pending jobs can be cancelled"));
        return;
    }
  });

  svr.Get("/v1/cluster/status", [this](const httplib::Request&, httplib::Response& res) {
    reply_json(res, 200, cluster_status_to_json(cluster_.status()));
  });
}

SchedHttpServer::~SchedHttpServer() { stop(); }

int SchedHttpServer::start(int port) {
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

void SchedHttpServer::stop() {
  if (server_ && server_->is_running()) server_->stop();
  if (serve_thread_.joinable()) serve_thread_.join();
}

std::string SchedHttpServer::base_url() const {
  return "http://" + host_ + ":" + std::to_string(port_);
}

}  // namespace photonq::sched
