#pragma once

#include <string>

#include "irsplan/scenario.hpp"
#include "irsplan/snr_core.hpp"

namespace irsplan {

DeploymentPlan load_plan(const std::string& text, const Scenario& sc);
DeploymentPlan load_plan_file(const std::string& path, const Scenario& sc);
std::string plan_to_json(const DeploymentPlan& plan);

}  // namespace irsplan
