import { ExplorerClient } from "./api.js";
import { mountExplorer } from "./view.js";

const PRESETS: Record<string, { n: number; arrows: [number, number][] }> = {
  "A2 (1->2)": { n: 2, arrows: [[1, 2]] },
  "A3 (2->1<-3)": { n: 3, arrows: [[2, 1], [3, 1]] },
  "A3 linear (1<-2<-3)": { n: 3, arrows: [[2, 1], [3, 2]] },
  "Kronecker (2=>1)": { n: 2, arrows: [[2, 1], [2, 1]] },
};

function boot(): void {
  const client = new ExplorerClient("");
  const picker = document.getElementById("preset") as HTMLSelectElement;
  const startButton = document.getElementById("start") as HTMLButtonElement;
  const stage = document.getElementById("stage") as HTMLElement;

  for (const name of Object.keys(PRESETS)) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    picker.appendChild(option);
  }

  startButton.addEventListener("click", () => {
    stage.innerHTML = "";
    void mountExplorer(stage, client, PRESETS[picker.value]).catch((err) => {
      stage.textContent = `failed to start session: ${err}`;
    });
  });
}

boot();
