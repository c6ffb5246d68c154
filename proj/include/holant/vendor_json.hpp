#pragma once

// nlohmann/json lives in the top-level vendor/ directory.
#include <json.hpp>
