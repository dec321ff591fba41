#pragma once

#include <memory>
#include <string>

#include "bkplan/model/model.h"

namespace bkplan::model {

// PDDL front-end for the STRIPS + :typing + :negative-preconditions subset.
// Anything outside the subset is rejected with an UnsupportedRequirementError
// naming the offending keyword.
Domain parse_domain(const std::string &text);
std::unique_ptr<LiftedTask> parse_problem(const std::string &text,
                                          const Domain &domain);

Domain parse_domain_file(const std::string &path);
std::unique_ptr<LiftedTask> parse_problem_file(const std::string &path,
                                               const Domain &domain);

// Canonical re-emission; parse(pretty_print(x)) equals x structurally.
std::string pretty_print(const Domain &domain);
std::string pretty_print(const LiftedTask &task);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace bkplan::model
