import { GameApi } from './api.js';
import { mount } from './ui.js';

const root = document.getElementById('app');
if (!root) throw new Error('missing #app container');
mount({ root, api: new GameApi('') });
