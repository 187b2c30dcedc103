#pragma once

#include "coevo/code_classify.hpp"
#include "coevo/coverage_ingest.hpp"
#include "coevo/error.hpp"
#include "coevo/history_model.hpp"
#include "coevo/metrics_engine.hpp"
#include "coevo/phase_detect.hpp"
#include "coevo/pipeline.hpp"
#include "coevo/repo_ingest.hpp"
#include "coevo/stats.hpp"
#include "coevo/svg.hpp"
#include "coevo/tsv.hpp"
#include "coevo/views.hpp"
